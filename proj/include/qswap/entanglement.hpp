#pragma once

#include "qswap/dynamics.hpp"

#include <string>

namespace qswap {

struct ReducedDensity2 {
    double rho22 = 0.0;
    cplx rho12 = 0.0;
    double rho11() const { return 1.0 - rho22; }
    Matrix matrix() const;
    std::array<double, 2> eigenvalues() const;  // ascending
    double purity() const;
};

enum class Keep { A, B };

ReducedDensity2 partial_trace(const Matrix& rho, Keep keep);

// S = -sum lambda ln lambda, 0 ln 0 := 0
double von_neumann_entropy(const ReducedDensity2& r);

// -Tr[rho_B ln rho_B] for the state evolved from |E1> in the symmetric system,
// written with k = Q22 (TR1 - TR2) sin^2(r/hbar) / r^2
double entropy_closed_form_SB(double q22, double tr_diff, double hbar = 1.0);

double correlation_expectation(const TwoQubitState& s);

// <psi(t)|C|psi(t)> expanded over the labeled eigen-system
double correlation_closed_form(const LabeledSpectrum& ls, const EigenbasisAmplitudes& ea, double t,
                               double hbar = 1.0);
double correlation_closed_form(const CaseParams& cp, const EigenbasisAmplitudes& ea, double t, double hbar = 1.0);

enum class GateKind { SWAP, ANTISWAP, INDETERMINATE };
std::string to_string(GateKind k);

constexpr double kClassifyThreshold = 0.05;
GateKind classify_gate(const std::vector<double>& f_trace, double threshold = kClassifyThreshold);

}  // namespace qswap
