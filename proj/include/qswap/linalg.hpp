#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qswap {

using cplx = std::complex<double>;

struct NonHermitian : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense square complex matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n);
    Matrix(int n, std::vector<cplx> entries);

    static Matrix identity(int n);
    static Matrix diag(const std::vector<double>& d);

    int dim() const { return n_; }
    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i * n_ + j)]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i * n_ + j)]; }
    const std::vector<cplx>& data() const { return a_; }

    Matrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    double frobenius() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(cplx s) const;
    std::vector<cplx> operator*(const std::vector<cplx>& v) const;

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v);  // |u><v|
double hermiticity_defect(const Matrix& h);                           // max |H - H^dagger|

struct Spectrum {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k belongs to values[k]
    std::vector<cplx> column(int k) const;
};

// Scale so the largest-magnitude component is real and positive.
void fix_phase(std::vector<cplx>& v);

Spectrum eigh(const Matrix& h);

Matrix matrix_function(const Matrix& h, const std::function<cplx(double)>& f);

constexpr double kEigenvalueFloor = 1e-15;
Matrix matrix_log(const Matrix& h);

// exp(-i H dt / hbar)
Matrix propagator(const Matrix& h, double dt, double hbar = 1.0);

Matrix pauli(int k);
// coeffs indexed with k_1 as the most significant base-4 digit
std::vector<double> pauli_decompose(const Matrix& h, int order);
Matrix pauli_reconstruct(const std::vector<double>& coeffs, int order);
int pauli_index(const std::vector<int>& ks);

// Projector onto span of the given columns; used to compare eigen-rays.
Matrix projector(const std::vector<std::vector<cplx>>& vs);

}  // namespace qswap
