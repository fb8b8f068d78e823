#include "qswap/qubit.hpp"

#include <cmath>

namespace qswap {

Matrix build_qubit_hamiltonian(const QubitParams& p) {
    return Matrix(2, {p.ep1, p.ts(), std::conj(p.ts()), p.ep2});
}

Spectrum qubit_spectrum_closed_form(const QubitParams& p) {
    const double mean = 0.5 * (p.ep1 + p.ep2);
    const double half = 0.5 * (p.ep1 - p.ep2);
    const cplx t = p.ts();
    const double r = std::sqrt(half * half + std::norm(t));
    if (r == 0.0) throw DegenerateInput("qubit Hamiltonian is a multiple of the identity");

    Spectrum s;
    s.values = {mean - r, mean + r};
    s.vectors = Matrix(2);
    for (int k = 0; k < 2; ++k) {
        const double e = s.values[static_cast<size_t>(k)];
        // two equivalent forms of the null vector of (H - e); take the better conditioned one
        std::vector<cplx> a{t, e - p.ep1};
        std::vector<cplx> b{e - p.ep2, std::conj(t)};
        const double na = std::norm(a[0]) + std::norm(a[1]);
        const double nb = std::norm(b[0]) + std::norm(b[1]);
        std::vector<cplx>& v = na >= nb ? a : b;
        const double nrm = std::sqrt(std::max(na, nb));
        for (auto& z : v) z /= nrm;
        fix_phase(v);
        s.vectors(0, k) = v[0];
        s.vectors(1, k) = v[1];
    }
    return s;
}

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

Matrix two_level_propagator(double h11, double h22, cplx h12, double dt, double hbar) {
    const double mean = 0.5 * (h11 + h22);
    const double a = 0.5 * (h11 - h22);
    const double r = std::sqrt(a * a + std::norm(h12));
    const double th = r * dt / hbar;
    const double c = std::cos(th);
    const double sk = sinc(th) * dt / hbar;  // sin(th) / r
    const cplx mi(0.0, -1.0);
    const cplx g = std::exp(mi * mean * dt / hbar);
    return Matrix(2, {g * (c + mi * sk * a), g * mi * sk * h12,
                      g * mi * sk * std::conj(h12), g * (c - mi * sk * a)});
}

Matrix qubit_propagator(const QubitParams& p, double dt, double hbar) {
    return two_level_propagator(p.ep1, p.ep2, p.ts(), dt, hbar);
}

QubitState apply(const Matrix& u, const QubitState& s) {
    return {u(0, 0) * s.alpha + u(0, 1) * s.beta, u(1, 0) * s.alpha + u(1, 1) * s.beta};
}

std::pair<double, double> measure_position(const QubitState& s) {
    return {std::norm(s.alpha), std::norm(s.beta)};
}

}  // namespace qswap
