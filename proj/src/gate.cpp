#include "qswap/gate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qswap {

namespace {

constexpr double kMinDistance = 1e-12;

using Vec4 = std::array<double, 4>;
using Vec2 = std::array<double, 2>;

Vec4 normalized(Vec4 v) {
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    for (double& x : v) x /= n;
    return v;
}

Vec4 kron2(const Vec2& a, const Vec2& b) {
    return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Eigen-pair of [[m + delta, t], [t, m - delta]]:
// lower ~ (rho - delta, -t), upper ~ (rho + delta, t), rho = sqrt(delta^2 + t^2).
struct TwoLevel {
    double lower, upper;
    Vec2 vlow, vup;
};

TwoLevel two_level(double m, double delta, double t) {
    const double rho = std::hypot(delta, t);
    TwoLevel r;
    r.lower = m - rho;
    r.upper = m + rho;
    if (rho == 0.0) {
        r.vlow = {0.0, 1.0};
        r.vup = {1.0, 0.0};
        return r;
    }
    // the alternative forms carry a factor sign(t) relative to the main ones
    Vec2 low = {rho - delta, -t};
    Vec2 low_alt = {sgn(t) * t, -sgn(t) * (delta + rho)};
    if (std::hypot(low_alt[0], low_alt[1]) > std::hypot(low[0], low[1])) low = low_alt;
    Vec2 up = {rho + delta, t};
    Vec2 up_alt = {sgn(t) * t, sgn(t) * (rho - delta)};
    if (std::hypot(up_alt[0], up_alt[1]) > std::hypot(up[0], up[1])) up = up_alt;
    const double nl = std::hypot(low[0], low[1]), nu = std::hypot(up[0], up[1]);
    r.vlow = {low[0] / nl, low[1] / nl};
    r.vup = {up[0] / nu, up[1] / nu};
    return r;
}

// diag(e1, e2, e2, e1) with hopping t on all four bonds: the symmetric swap and Case II family.
// Labels: E1 = e1 (-1,0,0,1), E2 = e2 (0,-1,1,0), E3 ~ (c,-1,-1,c), E4 ~ (1,c,c,1).
SwapSpectrum swap_family(double e1, double e2, double t) {
    const double delta = e1 - e2;
    const double r = std::sqrt(delta * delta + 16.0 * t * t);
    SwapSpectrum out;
    LabeledSpectrum& ls = out.spectrum;
    ls.energy = {e1, e2, 0.5 * (e1 + e2 - r), 0.5 * (e1 + e2 + r)};
    const double h = 1.0 / std::sqrt(2.0);
    ls.vec[0] = {-h, 0.0, 0.0, h};
    ls.vec[1] = {0.0, -h, h, 0.0};
    if (r == 0.0) {
        out.c = 1.0;
        ls.vec[2] = {0.5, -0.5, -0.5, 0.5};
        ls.vec[3] = {0.5, 0.5, 0.5, 0.5};
        return out;
    }
    if (delta >= 0.0) {
        out.c = 4.0 * t / (delta + r);
        ls.vec[3] = normalized({delta + r, 4.0 * t, 4.0 * t, delta + r});
        ls.vec[2] = normalized({4.0 * t, -(delta + r), -(delta + r), 4.0 * t});
    } else {
        out.c = t != 0.0 ? (r - delta) / (4.0 * t) : std::numeric_limits<double>::infinity();
        const double s = sgn(t);
        ls.vec[3] = normalized({s * 4.0 * t, s * (r - delta), s * (r - delta), s * 4.0 * t});
        ls.vec[2] = normalized({s * (r - delta), -s * 4.0 * t, -s * 4.0 * t, s * (r - delta)});
    }
    return out;
}

void check_geometry(const Geometry& g) {
    if (!(g.d > 0.0) || !(g.ab() > 0.0)) throw InvalidGeometry("need d > 0 and a + b > 0");
}

}  // namespace

PairDistances angled_distances(const Geometry& g) {
    check_geometry(g);
    const double ab = g.ab();
    const double c = std::cos(g.alpha), s = std::sin(g.alpha);
    const double x = g.d + c * ab;
    PairDistances p;
    p.d11 = std::sqrt(g.d * g.d + ab * ab);
    p.d21 = g.d;
    p.d12 = std::sqrt(x * x + (1.0 + s) * (1.0 + s) * ab * ab);
    p.d22 = std::sqrt(x * x + s * s * ab * ab);
    if (p.d12 < kMinDistance || p.d22 < kMinDistance) throw InvalidGeometry("dot positions coincide");
    return p;
}

CoulombTerms coulomb_parallel(double d1, double ab, double q) {
    if (!(d1 > 0.0) || !(ab > 0.0)) throw InvalidGeometry("need d1 > 0 and a + b > 0");
    const double q2 = q * q;
    CoulombTerms c;
    c.ec11 = c.ec22 = q2 / d1;
    c.ec12 = c.ec21 = q2 / std::sqrt(d1 * d1 + ab * ab);
    return c;
}

CoulombTerms coulomb_angled(const Geometry& g) {
    const PairDistances p = angled_distances(g);
    const double q2 = g.q * g.q;
    return {q2 / p.d11, q2 / p.d12, q2 / p.d21, q2 / p.d22};
}

Matrix build_two_qubit_hamiltonian(const TwoQubitSystem& s) {
    const CoulombTerms& c = s.coulomb;
    Matrix h = Matrix::diag({s.ep1 + s.ep1p + c.ec11, s.ep1 + s.ep2p + c.ec12,
                             s.ep2 + s.ep1p + c.ec21, s.ep2 + s.ep2p + c.ec22});
    h(0, 1) = h(2, 3) = s.ts1p2p;
    h(1, 0) = h(3, 2) = std::conj(s.ts1p2p);
    h(0, 2) = h(1, 3) = s.ts12;
    h(2, 0) = h(3, 1) = std::conj(s.ts12);
    return h;
}

std::vector<cplx> LabeledSpectrum::vector(int label) const {
    const auto& v = vec[static_cast<size_t>(label)];
    return {v[0], v[1], v[2], v[3]};
}

std::array<int, 4> LabeledSpectrum::order() const {
    std::array<int, 4> o{0, 1, 2, 3};
    std::stable_sort(o.begin(), o.end(), [&](int x, int y) { return energy[static_cast<size_t>(x)] < energy[static_cast<size_t>(y)]; });
    return o;
}

Spectrum LabeledSpectrum::sorted() const {
    const auto o = order();
    Spectrum s;
    s.vectors = Matrix(4);
    for (int k = 0; k < 4; ++k) {
        const int lab = o[static_cast<size_t>(k)];
        s.values.push_back(energy[static_cast<size_t>(lab)]);
        auto v = vector(lab);
        fix_phase(v);
        for (int i = 0; i < 4; ++i) s.vectors(i, k) = v[static_cast<size_t>(i)];
    }
    return s;
}

TwoQubitSystem symmetric_swap_system(const SymmetricSwapParams& p) {
    TwoQubitSystem s;
    s.ep1 = s.ep2 = s.ep1p = s.ep2p = p.vs;
    s.ts12 = s.ts1p2p = p.ts;
    s.coulomb = {p.ec1, p.ec2, p.ec2, p.ec1};
    return s;
}

SwapSpectrum symmetric_swap_spectrum(const SymmetricSwapParams& p) {
    return swap_family(p.ec1 + 2.0 * p.vs, p.ec2 + 2.0 * p.vs, p.ts);
}

double angle_condition(const Geometry& g) {
    const CoulombTerms c = coulomb_angled(g);
    return c.ec12 - c.ec22 - c.ec11 + c.ec21;
}

CaseParams case_solver(CaseId id, const Geometry& g, const OnSite& f) {
    const CoulombTerms c = coulomb_angled(g);
    CaseParams cp;
    cp.id = id;
    cp.geometry = g;
    cp.onsite = f;
    OnSite& e = cp.onsite;
    if (id != CaseId::II) {
        const double res = angle_condition(g);
        if (std::abs(res) > kCaseFeasibilityTol)
            throw InfeasibleAngle("angle condition violated (residual " + std::to_string(res) + ")");
    }
    switch (id) {
        case CaseId::I:
            e.ep2p = e.ep1p + c.ec21 - c.ec22;
            cp.u = e.ep1 + e.ep1p + c.ec11;
            cp.u1 = e.ep2 + e.ep1p + c.ec21;
            break;
        case CaseId::II:
            e.ep2 = e.ep1 - 0.5 * (c.ec22 - c.ec11 - c.ec12 + c.ec21);
            e.ep2p = e.ep1p - 0.5 * (c.ec12 - c.ec21 + c.ec22 - c.ec11);
            cp.u = e.ep1 + e.ep1p + c.ec11;
            cp.u1 = e.ep2 + e.ep1p + c.ec21;
            break;
        case CaseId::III:
            e.ep2 = e.ep1 + c.ec11 - c.ec21;
            cp.u = e.ep1 + e.ep1p + c.ec11;
            cp.u1 = e.ep1 + e.ep2p + c.ec12;
            break;
    }
    return cp;
}

CaseParams case_params(CaseId id, double u, double u1, double ts1, double ts2) {
    CaseParams cp;
    cp.id = id;
    cp.u = u;
    cp.u1 = u1;
    cp.ts1 = ts1;
    cp.ts2 = ts2;
    return cp;
}

TwoQubitSystem case_system(const CaseParams& cp) {
    TwoQubitSystem s;
    s.ep1 = cp.onsite.ep1;
    s.ep2 = cp.onsite.ep2;
    s.ep1p = cp.onsite.ep1p;
    s.ep2p = cp.onsite.ep2p;
    s.ts12 = cp.ts1;
    s.ts1p2p = cp.ts2;
    s.coulomb = coulomb_angled(cp.geometry);
    return s;
}

Matrix case_hamiltonian(const CaseParams& cp) {
    std::vector<double> d;
    switch (cp.id) {
        case CaseId::I: d = {cp.u, cp.u, cp.u1, cp.u1}; break;
        case CaseId::II: d = {cp.u, cp.u1, cp.u1, cp.u}; break;
        case CaseId::III: d = {cp.u, cp.u1, cp.u, cp.u1}; break;
    }
    Matrix h = Matrix::diag(d);
    h(0, 1) = h(1, 0) = h(2, 3) = h(3, 2) = cp.ts2;
    h(0, 2) = h(2, 0) = h(1, 3) = h(3, 1) = cp.ts1;
    return h;
}

LabeledSpectrum case_spectrum(const CaseParams& cp) {
    const double h = 1.0 / std::sqrt(2.0);
    const Vec2 minus = {h, -h}, plus = {h, h}, minus_r = {-h, h};
    const double m = 0.5 * (cp.u + cp.u1), delta = 0.5 * (cp.u - cp.u1);
    LabeledSpectrum ls;
    switch (cp.id) {
        case CaseId::I: {
            // (diag(U, U1) + ts1 X) on A, ts2 X on B
            const TwoLevel a = two_level(m, delta, cp.ts1);
            ls.energy = {a.lower - cp.ts2, a.lower + cp.ts2, a.upper - cp.ts2, a.upper + cp.ts2};
            ls.vec[0] = kron2(a.vlow, minus);
            ls.vec[1] = kron2({-a.vlow[0], -a.vlow[1]}, plus);
            ls.vec[2] = kron2(a.vup, minus_r);
            ls.vec[3] = kron2(a.vup, plus);
            break;
        }
        case CaseId::II: {
            if (cp.ts1 != cp.ts2) throw DomainError("Case II closed form needs ts1 == ts2");
            ls = swap_family(cp.u, cp.u1, cp.ts1).spectrum;
            break;
        }
        case CaseId::III: {
            // ts1 X on A, (diag(U, U1) + ts2 X) on B
            const TwoLevel b = two_level(m, delta, cp.ts2);
            ls.energy = {b.lower - cp.ts1, b.lower + cp.ts1, b.upper - cp.ts1, b.upper + cp.ts1};
            ls.vec[0] = kron2(minus, b.vlow);
            ls.vec[1] = kron2(plus, {-b.vlow[0], -b.vlow[1]});
            ls.vec[2] = kron2(minus_r, b.vup);
            ls.vec[3] = kron2(plus, b.vup);
            break;
        }
    }
    return ls;
}

std::vector<double> angle_roots(CaseId id, double d, double ab, double q) {
    if (id == CaseId::II) throw DomainError("Case II has no angle condition");
    if (!(d > 0.0) || !(ab > 0.0)) throw InvalidGeometry("need d > 0 and a + b > 0");
    constexpr int kGrid = 4096;
    constexpr double pi = std::numbers::pi;
    Geometry g{d, ab, 0.0, 0.0, q};
    auto f = [&](double alpha) {
        g.alpha = alpha;
        return angle_condition(g);
    };
    std::vector<double> roots;
    double a0 = -pi, f0 = f(a0);
    for (int k = 1; k <= kGrid; ++k) {
        const double a1 = -pi + 2.0 * pi * k / kGrid;
        const double f1 = f(a1);
        if (f1 == 0.0) {
            roots.push_back(a1);
        } else if (f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) {
            double lo = a0, hi = a1, flo = f0;
            while (hi - lo > 1e-13) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            double r = 0.5 * (lo + hi);
            if (r <= -pi) r += 2.0 * pi;
            roots.push_back(r);
        }
        a0 = a1;
        f0 = f1;
    }
    if (roots.empty()) throw NoRoot("no sign change of the angle condition on the grid");
    std::sort(roots.begin(), roots.end());
    return roots;
}

double taylor_sin_alpha(double d, double ab) {
    const double e = ab / d;
    return (1.0 / (e * e)) * (1.0 - 0.5 * e * e - d / std::sqrt(d * d + ab * ab));
}

}  // namespace qswap
