#pragma once

#include "qswap/entanglement.hpp"
#include "qswap/gate.hpp"

#include <array>
#include <vector>

namespace qswap {

struct InfeasibleDesign : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// occupation probabilities of node 1 (A) and node 1' (B)
struct LogicalPoint {
    double pA1 = 0.0, pB1p = 0.0;
};

using Potentials = OnSite;

// Quasi-classical energy, bilinear in (pA1, pB1'); kinetic terms dropped.
double phenomenological_energy(const LogicalPoint& lp, const Potentials& pot, const CoulombTerms& c);

// Geometry maps used by the designs.
CoulombTerms coulomb_designer_parallel(double d, double ab, double q);
CoulombTerms coulomb_designer_angled(const Geometry& g);
CoulombTerms coulomb_collinear(double d, double ab, double q);

constexpr double kDesignTol = 1e-10;

struct DesignResult {
    double ep1 = 0.0, ep2 = 0.0, ep1p = 0.0, ep2p = 0.0;
    double v1 = 0.0;  // correlated corners (0,0), (1,1)
    double v2 = 0.0;  // anticorrelated corners (1,0), (0,1)
    GateKind kind = GateKind::SWAP;
    bool feasible = false;
    Potentials potentials() const { return {ep1, ep2, ep1p, ep2p}; }
};

// Swap designs pin (ep2, ep2'); solved so that H(0,0)=H(1,1) and H(1,0)=H(0,1).
DesignResult design_symmetric_swap(double d, double ab, double q, double ep2 = 1.0, double ep2p = 1.0);
DesignResult design_angled_swap(const Geometry& g, double ep2 = 1.0, double ep2p = 1.0);
// Antiswap pins (ep1, ep2') on the collinear layout.
DesignResult design_antiswap(double d, double ab, double q, double ep1 = 1.0, double ep2p = 1.0);

// throws InfeasibleDesign unless r.feasible
const DesignResult& require_feasible(const DesignResult& r);

struct CornerAudit {
    std::array<LogicalPoint, 4> corner{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
    std::array<double, 4> energy{};
    std::vector<LogicalPoint> argmin;  // every corner within kDesignTol of the minimum
};
CornerAudit corner_audit(const Potentials& pot, const CoulombTerms& c);

}  // namespace qswap
