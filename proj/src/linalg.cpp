#include "qswap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qswap {

Matrix::Matrix(int n) : n_(n), a_(static_cast<size_t>(n * n), cplx(0.0, 0.0)) {}

Matrix::Matrix(int n, std::vector<cplx> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(n * n))
        throw DimensionMismatch("entry count does not match dimension");
    for (const auto& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("non-finite matrix entry");
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diag(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

cplx Matrix::trace() const {
    cplx s = 0.0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double Matrix::frobenius() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (o.n_ != n_) throw DimensionMismatch("matrix sum");
    Matrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (o.n_ != n_) throw DimensionMismatch("matrix difference");
    Matrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (o.n_ != n_) throw DimensionMismatch("matrix product");
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0)) continue;
            for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

Matrix Matrix::operator*(cplx s) const {
    Matrix r(*this);
    for (auto& z : r.a_) z *= s;
    return r;
}

std::vector<cplx> Matrix::operator*(const std::vector<cplx>& v) const {
    if (v.size() != static_cast<size_t>(n_)) throw DimensionMismatch("matrix-vector product");
    std::vector<cplx> r(v.size(), 0.0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const int na = a.dim(), nb = b.dim();
    Matrix r(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return r;
}

Matrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    if (u.size() != v.size()) throw DimensionMismatch("outer product");
    const int n = static_cast<int>(u.size());
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = u[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]);
    return r;
}

double hermiticity_defect(const Matrix& h) {
    double m = 0.0;
    for (int i = 0; i < h.dim(); ++i)
        for (int j = i; j < h.dim(); ++j) m = std::max(m, std::abs(h(i, j) - std::conj(h(j, i))));
    return m;
}

std::vector<cplx> Spectrum::column(int k) const {
    std::vector<cplx> v(static_cast<size_t>(vectors.dim()));
    for (int i = 0; i < vectors.dim(); ++i) v[static_cast<size_t>(i)] = vectors(i, k);
    return v;
}

void fix_phase(std::vector<cplx>& v) {
    double big = 0.0;
    for (const auto& z : v) big = std::max(big, std::abs(z));
    if (big == 0.0) return;
    // first component within a relative hair of the maximum, so ties resolve the same way every run
    for (const auto& z : v) {
        if (std::abs(z) >= big * (1.0 - 1e-10)) {
            const cplx ph = std::conj(z) / std::abs(z);
            for (auto& w : v) w *= ph;
            return;
        }
    }
}

namespace {

double off_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

Spectrum eigh(const Matrix& h) {
    const int n = h.dim();
    const double scale = h.frobenius();
    if (hermiticity_defect(h) > 1e-12) throw NonHermitian("eigh: input is not Hermitian");

    Matrix a = h;
    // symmetrize exactly so the rotations act on a truly Hermitian array
    for (int i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
    Matrix v = Matrix::identity(n);
    const double tol = 1e-14 * scale;

    bool converged = off_norm(a) <= tol;
    for (int sweep = 0; sweep < 50 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const cplx ph = apq / mag;  // e^{i phi}
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q); A <- J^dagger A J
                const cplx jpp = c, jpq = s, jqp = -s * std::conj(ph), jqq = c * std::conj(ph);
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
        converged = off_norm(a) <= tol;
    }
    if (!converged) throw NoConvergence("eigh: Jacobi sweep cap reached");

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

    Spectrum out;
    out.values.resize(static_cast<size_t>(n));
    out.vectors = Matrix(n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<size_t>(k)];
        out.values[static_cast<size_t>(k)] = a(src, src).real();
        std::vector<cplx> col(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = v(i, src);
        fix_phase(col);
        for (int i = 0; i < n; ++i) out.vectors(i, k) = col[static_cast<size_t>(i)];
    }
    return out;
}

Matrix matrix_function(const Matrix& h, const std::function<cplx(double)>& f) {
    const Spectrum sp = eigh(h);
    const int n = h.dim();
    Matrix r(n);
    for (int k = 0; k < n; ++k) {
        const cplx fk = f(sp.values[static_cast<size_t>(k)]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r(i, j) += fk * sp.vectors(i, k) * std::conj(sp.vectors(j, k));
    }
    return r;
}

Matrix matrix_log(const Matrix& h) {
    const Spectrum sp = eigh(h);
    for (double l : sp.values)
        if (l <= kEigenvalueFloor) throw DomainError("matrix_log: eigenvalue at or below floor");
    const int n = h.dim();
    Matrix r(n);
    for (int k = 0; k < n; ++k) {
        const double fk = std::log(sp.values[static_cast<size_t>(k)]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r(i, j) += fk * sp.vectors(i, k) * std::conj(sp.vectors(j, k));
    }
    return r;
}

Matrix propagator(const Matrix& h, double dt, double hbar) {
    const cplx mi(0.0, -1.0);
    return matrix_function(h, [&](double l) { return std::exp(mi * l * dt / hbar); });
}

Matrix pauli(int k) {
    const cplx i(0.0, 1.0);
    switch (k) {
        case 0: return Matrix(2, {1.0, 0.0, 0.0, 1.0});
        case 1: return Matrix(2, {0.0, 1.0, 1.0, 0.0});
        case 2: return Matrix(2, {0.0, -i, i, 0.0});
        case 3: return Matrix(2, {1.0, 0.0, 0.0, -1.0});
        default: throw DomainError("pauli index out of range");
    }
}

int pauli_index(const std::vector<int>& ks) {
    int idx = 0;
    for (int k : ks) idx = idx * 4 + k;
    return idx;
}

namespace {

Matrix pauli_string(int idx, int order) {
    std::vector<int> ks(static_cast<size_t>(order));
    for (int f = order - 1; f >= 0; --f) {
        ks[static_cast<size_t>(f)] = idx % 4;
        idx /= 4;
    }
    Matrix p = pauli(ks[0]);
    for (int f = 1; f < order; ++f) p = kron(p, pauli(ks[static_cast<size_t>(f)]));
    return p;
}

}  // namespace

std::vector<double> pauli_decompose(const Matrix& h, int order) {
    if (order < 1 || h.dim() != (1 << order)) throw DimensionMismatch("pauli_decompose: dim != 2^N");
    const int count = 1 << (2 * order);
    std::vector<double> coeffs(static_cast<size_t>(count));
    for (int idx = 0; idx < count; ++idx)
        coeffs[static_cast<size_t>(idx)] = (pauli_string(idx, order) * h).trace().real() / h.dim();
    return coeffs;
}

Matrix pauli_reconstruct(const std::vector<double>& coeffs, int order) {
    const int count = 1 << (2 * order);
    if (order < 1 || coeffs.size() != static_cast<size_t>(count))
        throw DimensionMismatch("pauli_reconstruct: coefficient count != 4^N");
    Matrix r(1 << order);
    for (int idx = 0; idx < count; ++idx) {
        const double c = coeffs[static_cast<size_t>(idx)];
        if (c != 0.0) r = r + pauli_string(idx, order) * c;
    }
    return r;
}

Matrix projector(const std::vector<std::vector<cplx>>& vs) {
    if (vs.empty()) throw DimensionMismatch("projector of empty set");
    Matrix p(static_cast<int>(vs[0].size()));
    for (const auto& v : vs) {
        double nrm = 0.0;
        for (const auto& z : v) nrm += std::norm(z);
        p = p + outer(v, v) * (1.0 / nrm);
    }
    return p;
}

}  // namespace qswap
