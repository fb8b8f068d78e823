#include "qswap/entanglement.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qswap {

Matrix ReducedDensity2::matrix() const {
    return Matrix(2, {rho11(), rho12, std::conj(rho12), rho22});
}

std::array<double, 2> ReducedDensity2::eigenvalues() const {
    const double half = 0.5 * (rho11() - rho22);
    const double r = std::sqrt(half * half + std::norm(rho12));
    auto clamp = [](double x) { return std::min(1.0, std::max(0.0, x)); };
    return {clamp(0.5 - r), clamp(0.5 + r)};
}

double ReducedDensity2::purity() const {
    const double a = rho11(), b = rho22;
    return a * a + b * b + 2.0 * std::norm(rho12);
}

ReducedDensity2 partial_trace(const Matrix& rho, Keep keep) {
    if (rho.dim() != 4) throw DimensionMismatch("partial_trace needs a 4x4 density matrix");
    ReducedDensity2 r;
    if (keep == Keep::B) {
        r.rho22 = (rho(1, 1) + rho(3, 3)).real();
        r.rho12 = rho(0, 1) + rho(2, 3);
    } else {
        r.rho22 = (rho(2, 2) + rho(3, 3)).real();
        r.rho12 = rho(0, 2) + rho(1, 3);
    }
    return r;
}

double von_neumann_entropy(const ReducedDensity2& r) {
    double s = 0.0;
    for (double l : r.eigenvalues())
        if (l > kEigenvalueFloor) s -= l * std::log(l);
    return s;
}

double entropy_closed_form_SB(double q22, double tr_diff, double hbar) {
    const double d = tr_diff;
    const double r2 = q22 * q22 + d * d;
    if (r2 == 0.0) return std::numbers::ln2;
    const double th = std::sqrt(r2) / hbar;
    const double c2 = std::cos(2.0 * th);
    const double s = std::sin(th);
    const double x1 = q22 * d * c2 + q22 * q22 - q22 * d + d * d;
    const double x2 = -q22 * d * c2 + q22 * q22 + q22 * d + d * d;
    const double trlog = -0.5 * std::log(4.0) +
                         0.5 * (std::log(x1) + std::log(x2) - 2.0 * std::log(r2) +
                                4.0 * q22 * (-d) * s * s / r2 * std::atanh(q22 * d * (c2 - 1.0) / r2));
    return -trlog;
}

double correlation_expectation(const TwoQubitState& s) {
    return std::norm(s.at(0)) + std::norm(s.at(3)) - std::norm(s.at(1)) - std::norm(s.at(2));
}

double correlation_closed_form(const LabeledSpectrum& ls, const EigenbasisAmplitudes& ea, double t, double hbar) {
    const auto p = occupancy_closed_form(ls, ea, t, hbar);
    return p[0] + p[3] - p[1] - p[2];
}

double correlation_closed_form(const CaseParams& cp, const EigenbasisAmplitudes& ea, double t, double hbar) {
    return correlation_closed_form(case_spectrum(cp), ea, t, hbar);
}

std::string to_string(GateKind k) {
    switch (k) {
        case GateKind::SWAP: return "SWAP";
        case GateKind::ANTISWAP: return "ANTISWAP";
        default: return "INDETERMINATE";
    }
}

GateKind classify_gate(const std::vector<double>& f_trace, double threshold) {
    if (f_trace.empty()) throw DomainError("classify_gate: empty trace");
    const double mean = std::accumulate(f_trace.begin(), f_trace.end(), 0.0) / static_cast<double>(f_trace.size());
    if (mean < -threshold) return GateKind::SWAP;
    if (mean > threshold) return GateKind::ANTISWAP;
    return GateKind::INDETERMINATE;
}

}  // namespace qswap
