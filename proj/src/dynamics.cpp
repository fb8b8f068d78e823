#include "qswap/dynamics.hpp"

#include "qswap/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qswap {

namespace {

void check_grid(const std::vector<double>& t) {
    if (t.empty()) throw GridError("empty time grid");
    for (size_t k = 1; k < t.size(); ++k)
        if (!(t[k] > t[k - 1])) throw GridError("time grid not strictly increasing at index " + std::to_string(k));
}

void check_normalized(const TwoQubitState& s) {
    if (s.size() != 4) throw DimensionMismatch("two-qubit state needs 4 amplitudes");
    if (std::abs(norm2(s) - 1.0) > 1e-10) throw DomainError("initial state not normalized");
}

const double kH = 1.0 / std::sqrt(2.0);
const TwoQubitState kPlusA{kH, 0.0, 0.0, kH};
const TwoQubitState kPlusB{0.0, kH, kH, 0.0};
const TwoQubitState kMinusA{kH, 0.0, 0.0, -kH};
const TwoQubitState kMinusB{0.0, kH, -kH, 0.0};

// sum_ij u(i,j) |s_i><s_j| for a 2x2 block u on the basis pair s
Matrix embed(const Matrix& u, const TwoQubitState& s0, const TwoQubitState& s1) {
    const TwoQubitState* s[2] = {&s0, &s1};
    Matrix r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r = r + outer(*s[i], *s[j]) * u(i, j);
    return r;
}

}  // namespace

TwoQubitState basis_state(int k) {
    TwoQubitState s(4, 0.0);
    s.at(static_cast<size_t>(k)) = 1.0;
    return s;
}

double norm2(const TwoQubitState& s) {
    double n = 0.0;
    for (const auto& z : s) n += std::norm(z);
    return n;
}

Matrix density(const TwoQubitState& s) { return outer(s, s); }

std::vector<double> linear_grid(double t0, double t1, int steps) {
    if (steps < 1) throw GridError("need at least one step");
    std::vector<double> t(static_cast<size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) t[static_cast<size_t>(k)] = t0 + (t1 - t0) * k / steps;
    return t;
}

std::vector<TwoQubitState> evolve(const Matrix& h, const TwoQubitState& psi0, const std::vector<double>& t_grid,
                                  double hbar) {
    check_grid(t_grid);
    check_normalized(psi0);
    const Spectrum sp = eigh(h);
    const int n = h.dim();
    std::vector<cplx> a(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) a[static_cast<size_t>(k)] += std::conj(sp.vectors(i, k)) * psi0[static_cast<size_t>(i)];

    std::vector<TwoQubitState> out;
    out.reserve(t_grid.size());
    const cplx mi(0.0, -1.0);
    for (double t : t_grid) {
        const double dt = t - t_grid.front();
        TwoQubitState s(static_cast<size_t>(n), 0.0);
        for (int k = 0; k < n; ++k) {
            const cplx ak = a[static_cast<size_t>(k)] * std::exp(mi * sp.values[static_cast<size_t>(k)] * dt / hbar);
            for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] += ak * sp.vectors(i, k);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<TwoQubitState> evolve(const std::function<Matrix(double)>& h_of_t, const TwoQubitState& psi0,
                                  const std::vector<double>& t_grid, double hbar, double max_step) {
    check_grid(t_grid);
    check_normalized(psi0);
    if (max_step <= 0.0) {
        const double hmax = h_of_t(t_grid.front()).max_abs();
        max_step = hmax > 0.0 ? 0.01 * hbar / hmax : std::numeric_limits<double>::infinity();
    }
    std::vector<TwoQubitState> out;
    out.reserve(t_grid.size());
    TwoQubitState psi = psi0;
    out.push_back(psi);
    for (size_t k = 1; k < t_grid.size(); ++k) {
        const double span = t_grid[k] - t_grid[k - 1];
        const int sub = std::max(1, static_cast<int>(std::ceil(span / max_step - 1e-9)));
        const double dt = span / sub;
        for (int j = 0; j < sub; ++j) {
            const double mid = t_grid[k - 1] + (j + 0.5) * dt;
            psi = propagator(h_of_t(mid), dt, hbar) * psi;
        }
        out.push_back(psi);
    }
    return out;
}

Matrix symmetric_hamiltonian(double q11, double q22, double tsr1, double tsr2) {
    Matrix h = Matrix::diag({q11 + q22, q11 - q22, q11 - q22, q11 + q22});
    h(0, 1) = h(1, 0) = h(2, 3) = h(3, 2) = tsr2;
    h(0, 2) = h(2, 0) = h(1, 3) = h(3, 1) = tsr1;
    return h;
}

Matrix analytic_U_symmetric(const IntegratedParams& ip, double hbar) {
    // X (x) X commutes with H: the correlated-even and correlated-odd sectors evolve independently
    const Matrix up = two_level_propagator(ip.q22, -ip.q22, ip.tr1 + ip.tr2, 1.0, hbar);
    const Matrix um = two_level_propagator(ip.q22, -ip.q22, ip.tr2 - ip.tr1, 1.0, hbar);
    const cplx g = std::exp(cplx(0.0, -ip.q11 / hbar));
    return (embed(up, kPlusA, kPlusB) + embed(um, kMinusA, kMinusB)) * g;
}

Matrix analytic_U_localized(const IntegratedParams& ip, double hbar) {
    const cplx hop(ip.tr1, ip.ti1);
    const Matrix u13 = two_level_propagator(ip.Q[0], ip.Q[2], hop, 1.0, hbar);
    const Matrix u24 = two_level_propagator(ip.Q[1], ip.Q[3], hop, 1.0, hbar);
    Matrix u(4);
    const int blocks[2][2] = {{0, 2}, {1, 3}};
    const Matrix* us[2] = {&u13, &u24};
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) u(blocks[b][i], blocks[b][j]) = (*us[b])(i, j);
    return u;
}

Matrix analytic_rho_from_E1(const IntegratedParams& ip, double hbar) {
    const double q = ip.q22;
    const double d = ip.tr1 - ip.tr2;
    const double r2 = q * q + d * d;
    Matrix rho(4);
    if (r2 == 0.0) {
        rho(0, 0) = rho(3, 3) = 0.5;
        rho(0, 3) = rho(3, 0) = -0.5;
        return rho;
    }
    const double r = std::sqrt(r2);
    const double th = r / hbar;
    const double c2 = std::cos(2.0 * th), s2 = std::sin(2.0 * th), s = std::sin(th);
    const cplx i(0.0, 1.0);

    const double diag_out = (d * d * c2 + 2.0 * q * q + d * d) / (4.0 * r2);  // rho11 = rho44
    const double diag_in = d * d * s * s / (2.0 * r2);                        // rho22 = rho33
    const cplx x12 = d * (-i * r * s2 + q * c2 - q) / (4.0 * r2);
    const cplx x21 = d * (i * r * s2 + q * c2 - q) / (4.0 * r2);

    rho(0, 0) = rho(3, 3) = diag_out;
    rho(0, 3) = rho(3, 0) = -diag_out;
    rho(1, 1) = rho(2, 2) = diag_in;
    rho(1, 2) = rho(2, 1) = -diag_in;
    rho(0, 1) = x12;
    rho(0, 2) = -x12;
    rho(1, 0) = x21;
    rho(2, 0) = -x21;
    rho(1, 3) = -x21;
    rho(3, 1) = -x12;
    rho(2, 3) = x21;
    rho(3, 2) = x12;
    return rho;
}

Occupancy occupancy_probabilities(const TwoQubitState& s) {
    Occupancy o;
    o.p11 = std::norm(s.at(0));
    o.p12 = std::norm(s.at(1));
    o.p21 = std::norm(s.at(2));
    o.p22 = std::norm(s.at(3));
    o.pA1 = o.p11 + o.p12;
    o.pB1 = o.p11 + o.p21;
    return o;
}

TwoQubitState state_from_amplitudes(const LabeledSpectrum& ls, const EigenbasisAmplitudes& ea, double t,
                                    double hbar) {
    TwoQubitState s(4, 0.0);
    for (int j = 0; j < 4; ++j) {
        const auto uj = static_cast<size_t>(j);
        const cplx a = ea.c[uj] * std::exp(cplx(0.0, ea.phi[uj] - ls.energy[uj] * t / hbar));
        for (int k = 0; k < 4; ++k) s[static_cast<size_t>(k)] += a * ls.vec[uj][static_cast<size_t>(k)];
    }
    return s;
}

std::array<double, 4> occupancy_closed_form(const LabeledSpectrum& ls, const EigenbasisAmplitudes& ea, double t,
                                            double hbar) {
    std::array<double, 4> p{};
    for (size_t k = 0; k < 4; ++k) {
        double acc = 0.0;
        for (size_t j = 0; j < 4; ++j) acc += ea.c[j] * ea.c[j] * ls.vec[j][k] * ls.vec[j][k];
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j) {
                const double beat = ea.phi[i] - ea.phi[j] - (ls.energy[i] - ls.energy[j]) * t / hbar;
                acc += 2.0 * ea.c[i] * ea.c[j] * ls.vec[i][k] * ls.vec[j][k] * std::cos(beat);
            }
        p[k] = acc;
    }
    return p;
}

std::array<double, 4> occupancy_closed_form(const CaseParams& cp, const EigenbasisAmplitudes& ea, double t,
                                            double hbar) {
    return occupancy_closed_form(case_spectrum(cp), ea, t, hbar);
}

CoolingTrace cooling_protocol(const SymmetricSwapParams& p, const CoolingSchedule& sched, const TwoQubitState& psi0,
                              double hbar) {
    const LabeledSpectrum ls = symmetric_swap_spectrum(p).spectrum;
    const double gap = std::abs(ls.energy[1] - ls.energy[0]);
    const double f = (sched.sign == Drive::Cool ? 1.0 : -1.0) * sched.f_amplitude;
    if (f != 0.0 && !(std::abs(f) < 0.1 * gap))
        throw PerturbationTooLarge("|f| must stay below 0.1 |E2 - E1|");
    const double omega = sched.omega < 0.0 ? gap / hbar : sched.omega;

    TwoQubitSystem base = symmetric_swap_system(p);
    auto h_of_t = [&](double t) {
        const double ft = f * std::cos(omega * t);
        TwoQubitSystem s = base;
        s.ts12 = p.ts - 0.5 * ft;
        s.ts1p2p = p.ts + 0.5 * ft;
        return build_two_qubit_hamiltonian(s);
    };
    CoolingTrace tr;
    tr.t = linear_grid(0.0, sched.duration, sched.steps);
    const auto states = evolve(h_of_t, psi0, tr.t, hbar);
    for (const auto& s : states) {
        std::array<double, 4> pop{};
        for (size_t k = 0; k < 4; ++k) {
            cplx ov = 0.0;
            for (size_t i = 0; i < 4; ++i) ov += ls.vec[k][i] * s[i];
            pop[k] = std::norm(ov);
        }
        tr.pop.push_back(pop);
    }
    return tr;
}

}  // namespace qswap
