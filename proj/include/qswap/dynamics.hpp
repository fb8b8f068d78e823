#pragma once

#include "qswap/gate.hpp"

#include <array>
#include <functional>
#include <vector>

namespace qswap {

struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PerturbationTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using TwoQubitState = std::vector<cplx>;  // gamma_1..gamma_4

TwoQubitState basis_state(int k);
double norm2(const TwoQubitState& s);
Matrix density(const TwoQubitState& s);

// Constant H: exact spectral propagation between grid points.
std::vector<TwoQubitState> evolve(const Matrix& h, const TwoQubitState& psi0,
                                  const std::vector<double>& t_grid, double hbar = 1.0);

// Time-dependent H(t): piecewise-constant midpoint steps no longer than max_step
// (max_step <= 0 picks 0.01 hbar / max|H(t0)|).
std::vector<TwoQubitState> evolve(const std::function<Matrix(double)>& h_of_t, const TwoQubitState& psi0,
                                  const std::vector<double>& t_grid, double hbar = 1.0, double max_step = 0.0);

std::vector<double> linear_grid(double t0, double t1, int steps);

struct IntegratedParams {
    double q11 = 0.0, q22 = 0.0;
    double tr1 = 0.0, ti1 = 0.0, tr2 = 0.0;
    std::array<double, 4> Q{};  // localized case diagonal integrals
};

// Symmetric Hamiltonian: diag(q11+q22, q11-q22, q11-q22, q11+q22), tsr1 on (1,3)/(2,4),
// tsr2 on (1,2)/(3,4). Integrated parameters are these times dt for constant H.
Matrix symmetric_hamiltonian(double q11, double q22, double tsr1, double tsr2);

Matrix analytic_U_symmetric(const IntegratedParams& ip, double hbar = 1.0);
Matrix analytic_U_localized(const IntegratedParams& ip, double hbar = 1.0);
Matrix analytic_rho_from_E1(const IntegratedParams& ip, double hbar = 1.0);

struct Occupancy {
    double p11, p12, p21, p22;
    double pA1, pB1;
};
Occupancy occupancy_probabilities(const TwoQubitState& s);

struct EigenbasisAmplitudes {
    std::array<double, 4> c{};
    std::array<double, 4> phi{};
};

// c_k e^{i phi_k} e^{-i E_k t / hbar} |E_k> summed over the labeled spectrum
TwoQubitState state_from_amplitudes(const LabeledSpectrum& ls, const EigenbasisAmplitudes& ea, double t,
                                    double hbar = 1.0);

// Expanded cosine form of |<k|psi(t)>|^2 for the case eigen-system.
std::array<double, 4> occupancy_closed_form(const CaseParams& cp, const EigenbasisAmplitudes& ea, double t,
                                            double hbar = 1.0);
std::array<double, 4> occupancy_closed_form(const LabeledSpectrum& ls, const EigenbasisAmplitudes& ea, double t,
                                            double hbar = 1.0);

enum class Drive { Cool, Heat };

struct CoolingSchedule {
    double f_amplitude = 0.0;
    double duration = 1.0;
    Drive sign = Drive::Cool;
    // drive angular frequency; negative selects resonance |E2 - E1| / hbar, 0 is a static shift
    double omega = -1.0;
    int steps = 1000;
};

struct CoolingTrace {
    std::vector<double> t;
    std::vector<std::array<double, 4>> pop;  // |<E_k|psi(t)>|^2, unperturbed labels E1..E4
};

CoolingTrace cooling_protocol(const SymmetricSwapParams& p, const CoolingSchedule& sched,
                              const TwoQubitState& psi0, double hbar = 1.0);

}  // namespace qswap
