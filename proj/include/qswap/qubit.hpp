#pragma once

#include "qswap/linalg.hpp"

#include <utility>

namespace qswap {

struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QubitParams {
    double ep1 = 0.0, ep2 = 0.0;
    double tsr = 0.0, tsi = 0.0;
    cplx ts() const { return {tsr, tsi}; }
};

struct QubitState {
    cplx alpha = 1.0, beta = 0.0;
};

Matrix build_qubit_hamiltonian(const QubitParams& p);

// E1 <= E2 with normalized eigenvectors under the fix_phase convention.
// Throws DegenerateInput when H is a multiple of the identity.
Spectrum qubit_spectrum_closed_form(const QubitParams& p);

// exp(-i H dt / hbar) for [[h11, h12], [conj(h12), h22]]
Matrix two_level_propagator(double h11, double h22, cplx h12, double dt, double hbar);

Matrix qubit_propagator(const QubitParams& p, double dt, double hbar = 1.0);

QubitState apply(const Matrix& u, const QubitState& s);

std::pair<double, double> measure_position(const QubitState& s);

// sin(x)/x with the removable singularity filled in
double sinc(double x);

}  // namespace qswap
