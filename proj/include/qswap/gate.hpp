#pragma once

#include "qswap/linalg.hpp"

#include <array>
#include <vector>

namespace qswap {

// Basis order everywhere: |1,1'>, |1,2'>, |2,1'>, |2,2'>  (qubit A is the major index).

struct InvalidGeometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfeasibleAngle : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Geometry {
    double d = 1.0;
    double a = 0.1, b = 0.1;
    double alpha = 0.0;
    double q = 1.0;
    double ab() const { return a + b; }
};

// Pair distances d_{kl'} of the angled layout.
struct PairDistances {
    double d11, d12, d21, d22;
};
PairDistances angled_distances(const Geometry& g);

struct CoulombTerms {
    double ec11 = 0.0, ec12 = 0.0, ec21 = 0.0, ec22 = 0.0;
};

CoulombTerms coulomb_parallel(double d1, double ab, double q);
CoulombTerms coulomb_angled(const Geometry& g);

struct TwoQubitSystem {
    double ep1 = 0.0, ep2 = 0.0, ep1p = 0.0, ep2p = 0.0;
    cplx ts12 = 0.0;    // qubit A hopping, couples (1,3) and (2,4)
    cplx ts1p2p = 0.0;  // qubit B hopping, couples (1,2) and (3,4)
    CoulombTerms coulomb;
};

Matrix build_two_qubit_hamiltonian(const TwoQubitSystem& sys);

// Closed-form eigen-system keyed by the E1..E4 labels, real eigenvectors normalized,
// sign orientation fixed per family (see gate.cpp).
struct LabeledSpectrum {
    std::array<double, 4> energy{};
    std::array<std::array<double, 4>, 4> vec{};

    std::vector<cplx> vector(int label) const;  // label 0..3 for E1..E4
    std::array<int, 4> order() const;           // order()[k] = label at ascending position k
    Spectrum sorted() const;                    // ascending, fix_phase applied
};

struct SymmetricSwapParams {
    double vs = 0.0;
    double ts = 1.0;
    double ec1 = 1.0, ec2 = 0.5;
};

TwoQubitSystem symmetric_swap_system(const SymmetricSwapParams& p);

struct SwapSpectrum {
    LabeledSpectrum spectrum;
    double c = 0.0;  // weight of the anticorrelated components of |E4> = (1, c, c, 1)
};
SwapSpectrum symmetric_swap_spectrum(const SymmetricSwapParams& p);

enum class CaseId { I, II, III };

struct OnSite {
    double ep1 = 0.0, ep2 = 0.0, ep1p = 0.0, ep2p = 0.0;
};

struct CaseParams {
    CaseId id = CaseId::I;
    double u = 0.0, u1 = 0.0;
    double ts1 = 1.0;  // qubit A hopping (1,3)/(2,4)
    double ts2 = 1.0;  // qubit B hopping (1,2)/(3,4)
    OnSite onsite;     // free entries as supplied, predetermined ones solved
    Geometry geometry;
};

// Residual of the Case I / Case III angle condition; both cases reduce to
//   q^2/d12' - q^2/d22' = q^2/d11' - q^2/d
double angle_condition(const Geometry& g);

constexpr double kCaseFeasibilityTol = 1e-9;

CaseParams case_solver(CaseId id, const Geometry& g, const OnSite& free_params);
TwoQubitSystem case_system(const CaseParams& cp);  // from geometry + on-site energies
Matrix case_hamiltonian(const CaseParams& cp);     // from the (U, U1) diagonal pattern
LabeledSpectrum case_spectrum(const CaseParams& cp);

// Case from (U, U1, hoppings) alone, skipping the geometry.
CaseParams case_params(CaseId id, double u, double u1, double ts1 = 1.0, double ts2 = 1.0);

std::vector<double> angle_roots(CaseId id, double d, double ab, double q = 1.0);

// small (a+b)/d estimate of sin(alpha) at the Case I roots
double taylor_sin_alpha(double d, double ab);

}  // namespace qswap
