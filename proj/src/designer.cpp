#include "qswap/designer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qswap {

namespace {

void check_pair(double d, double ab) {
    if (!(d > 0.0) || !(ab > 0.0)) throw InvalidGeometry("need d > 0 and a + b > 0");
}

double corner(double pa, double pb, const Potentials& p, const CoulombTerms& c) {
    return phenomenological_energy({pa, pb}, p, c);
}

DesignResult finish(DesignResult r, const CoulombTerms& c) {
    const Potentials p = r.potentials();
    r.v1 = corner(0, 0, p, c);
    r.v2 = corner(1, 0, p, c);
    r.feasible = r.kind == GateKind::SWAP ? r.v2 < r.v1 - kDesignTol : r.v1 < r.v2 - kDesignTol;
    return r;
}

DesignResult solve_swap(const CoulombTerms& c, double ep2, double ep2p) {
    const double sum = ep2 + ep2p + c.ec22 - c.ec11;
    const double dif = ep2 - ep2p + c.ec21 - c.ec12;
    DesignResult r;
    r.ep2 = ep2;
    r.ep2p = ep2p;
    r.ep1 = 0.5 * (sum + dif);
    r.ep1p = 0.5 * (sum - dif);
    r.kind = GateKind::SWAP;
    return finish(r, c);
}

}  // namespace

double phenomenological_energy(const LogicalPoint& lp, const Potentials& pot, const CoulombTerms& c) {
    const double a = lp.pA1, b = lp.pB1p;
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
        throw DomainError("occupation probabilities must lie in [0, 1]");
    return a * pot.ep1 + (1 - a) * pot.ep2 + b * pot.ep1p + (1 - b) * pot.ep2p + a * b * c.ec11 +
           (1 - a) * (1 - b) * c.ec22 + a * (1 - b) * c.ec12 + b * (1 - a) * c.ec21;
}

CoulombTerms coulomb_designer_parallel(double d, double ab, double q) {
    return coulomb_parallel(d, ab, q);
}

CoulombTerms coulomb_designer_angled(const Geometry& g) {
    const double d = g.d, ab = g.ab();
    check_pair(d, ab);
    const double s = std::sin(g.alpha), c = std::cos(g.alpha);
    const double q2 = g.q * g.q;
    const double r11 = std::hypot(d, ab);
    const double r22 = std::hypot(d + c * ab, s * ab);
    const double r12 = std::hypot(d + c * ab, (1 + s) * ab);
    if (r22 < 1e-12 || r12 < 1e-12) throw InvalidGeometry("angled layout puts two nodes on top of each other");
    return {q2 / r11, q2 / r12, q2 / r11, q2 / r22};
}

CoulombTerms coulomb_collinear(double d, double ab, double q) {
    check_pair(d, ab);
    const double q2 = q * q;
    return {q2 / (d + ab), q2 / (d + 2 * ab), q2 / d, q2 / (d + ab)};
}

DesignResult design_symmetric_swap(double d, double ab, double q, double ep2, double ep2p) {
    return solve_swap(coulomb_designer_parallel(d, ab, q), ep2, ep2p);
}

DesignResult design_angled_swap(const Geometry& g, double ep2, double ep2p) {
    return solve_swap(coulomb_designer_angled(g), ep2, ep2p);
}

DesignResult design_antiswap(double d, double ab, double q, double ep1, double ep2p) {
    const CoulombTerms c = coulomb_collinear(d, ab, q);
    DesignResult r;
    r.ep1 = ep1;
    r.ep2p = ep2p;
    r.ep2 = ep1 + 0.5 * (c.ec11 - c.ec22 + c.ec12 - c.ec21);
    r.ep1p = ep2p + 0.5 * (c.ec12 - c.ec21 - c.ec11 + c.ec22);
    r.kind = GateKind::ANTISWAP;
    return finish(r, c);
}

const DesignResult& require_feasible(const DesignResult& r) {
    if (!r.feasible)
        throw InfeasibleDesign(to_string(r.kind) + " design has no strict minimum: v1 = " + std::to_string(r.v1) +
                               ", v2 = " + std::to_string(r.v2));
    return r;
}

CornerAudit corner_audit(const Potentials& pot, const CoulombTerms& c) {
    CornerAudit a;
    for (size_t k = 0; k < 4; ++k) a.energy[k] = phenomenological_energy(a.corner[k], pot, c);
    const double lo = *std::min_element(a.energy.begin(), a.energy.end());
    for (size_t k = 0; k < 4; ++k)
        if (a.energy[k] <= lo + kDesignTol) a.argmin.push_back(a.corner[k]);
    return a;
}

}  // namespace qswap
