#include "qswap/sweeps.hpp"

#include "qswap/designer.hpp"
#include "qswap/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>


namespace qswap {

namespace {

using Row = std::vector<double>;

// Evaluates f(0..n-1) serially or across threads; row i always lands in slot i.
template <class F>
std::vector<Row> gather(size_t n, int threads, F f) {
    std::vector<Row> rows(n);
    if (threads <= 1) {
        for (size_t i = 0; i < n; ++i) rows[i] = f(i);
        return rows;
    }
    std::vector<std::exception_ptr> err(n);
    const auto sn = static_cast<long>(n);
#pragma omp parallel for num_threads(threads) schedule(static)
    for (long i = 0; i < sn; ++i) {
        try {
            rows[static_cast<size_t>(i)] = f(static_cast<size_t>(i));
        } catch (...) {
            err[static_cast<size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : err)
        if (e) std::rethrow_exception(e);
    return rows;
}

RunConfig at_axis(RunConfig c, double x) {
    const std::string& a = c.axis;
    if (a == "d") c.geometry.d = x;
    else if (a == "ab") c.geometry.a = c.geometry.b = 0.5 * x;
    else if (a == "alpha") c.geometry.alpha = x;
    else if (a == "q") c.geometry.q = x;
    else if (a == "ts") c.ts12 = c.ts1p2p = x;
    else if (a == "ts12") c.ts12 = x;
    else if (a == "ts1p2p") c.ts1p2p = x;
    return c;
}

CsvTable spectrum_sweep(const RunConfig& cfg, int threads) {
    const auto xs = cfg.axis_values();
    CsvTable t;
    t.header = {cfg.axis, "E1", "E2", "E3", "E4", "gap_min"};
    t.rows = gather(xs.size(), threads, [&](size_t i) {
        const auto p = spectrum_point(cfg, xs[i]);
        return Row{xs[i], p[0], p[1], p[2], p[3], p[4]};
    });
    return t;
}

// Constant-H propagation in the eigenbasis of H, evaluated independently per time point.
struct Propagation {
    Spectrum sp;
    std::vector<cplx> a;
    double t0, hbar;

    TwoQubitState at(double t) const {
        TwoQubitState s(4, 0.0);
        for (size_t k = 0; k < 4; ++k) {
            const cplx ak = a[k] * std::exp(cplx(0.0, -sp.values[k] * (t - t0) / hbar));
            for (size_t i = 0; i < 4; ++i) s[i] += ak * sp.vectors(static_cast<int>(i), static_cast<int>(k));
        }
        return s;
    }
};

Propagation prepare(const RunConfig& cfg) {
    Propagation p{eigh(model_hamiltonian(cfg)), std::vector<cplx>(4, 0.0), cfg.t0, cfg.hbar};
    if (cfg.basis > 0) {
        for (size_t k = 0; k < 4; ++k) p.a[k] = std::conj(p.sp.vectors(cfg.basis - 1, static_cast<int>(k)));
    } else {
        for (size_t k = 0; k < 4; ++k) p.a[k] = cfg.amps.c[k] * std::exp(cplx(0.0, cfg.amps.phi[k]));
    }
    return p;
}

CsvTable time_table(const RunConfig& cfg, int threads, std::vector<std::string> cols,
                    Row (*fn)(const TwoQubitState&)) {
    const Propagation p = prepare(cfg);
    const auto ts = linear_grid(cfg.t0, cfg.t1, cfg.steps);
    CsvTable t;
    t.header = {"t"};
    t.header.insert(t.header.end(), cols.begin(), cols.end());
    t.rows = gather(ts.size(), threads, [&](size_t i) {
        Row r{ts[i]};
        const Row v = fn(p.at(ts[i]));
        r.insert(r.end(), v.begin(), v.end());
        return r;
    });
    return t;
}

Row evolve_row(const TwoQubitState& s) {
    Row r;
    for (const auto& z : s) {
        r.push_back(z.real());
        r.push_back(z.imag());
    }
    const Occupancy o = occupancy_probabilities(s);
    r.insert(r.end(), {o.p11, o.p12, o.p21, o.p22, o.pA1, o.pB1});
    return r;
}

Row entropy_row(const TwoQubitState& s) {
    const Matrix rho = density(s);
    const ReducedDensity2 rb = partial_trace(rho, Keep::B);
    const ReducedDensity2 ra = partial_trace(rho, Keep::A);
    return {von_neumann_entropy(rb), ra.purity(), rb.purity()};
}

Row correlation_row(const TwoQubitState& s) { return {correlation_expectation(s)}; }

double gate_code(GateKind k) {
    return k == GateKind::SWAP ? -1.0 : k == GateKind::ANTISWAP ? 1.0 : 0.0;
}

CsvTable design_table(const RunConfig& cfg) {
    const Geometry& g = cfg.geometry;
    DesignResult r;
    switch (cfg.design) {
        case DesignKind::Symmetric:
            r = design_symmetric_swap(g.d, g.ab(), g.q, cfg.onsite.ep2, cfg.onsite.ep2p);
            break;
        case DesignKind::Angled:
            r = design_angled_swap(g, cfg.onsite.ep2, cfg.onsite.ep2p);
            break;
        case DesignKind::Antiswap:
            r = design_antiswap(g.d, g.ab(), g.q, cfg.onsite.ep1, cfg.onsite.ep2p);
            break;
    }
    CsvTable t;
    t.header = {"ep1", "ep2", "ep1p", "ep2p", "v1", "v2", "kind", "feasible"};
    t.rows = {{r.ep1, r.ep2, r.ep1p, r.ep2p, r.v1, r.v2, gate_code(r.kind), r.feasible ? 1.0 : 0.0}};
    return t;
}

CsvTable cool_table(const RunConfig& cfg) {
    const LabeledSpectrum ls = symmetric_swap_spectrum(cfg.swap).spectrum;
    const CoolingTrace tr = cooling_protocol(cfg.swap, cfg.schedule, ls.vector(cfg.start_label - 1), cfg.hbar);
    CsvTable t;
    t.header = {"t", "pop_E1", "pop_E2", "pop_E3", "pop_E4"};
    for (size_t i = 0; i < tr.t.size(); ++i)
        t.rows.push_back({tr.t[i], tr.pop[i][0], tr.pop[i][1], tr.pop[i][2], tr.pop[i][3]});
    return t;
}

}  // namespace

std::string format_number(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite value in output table");
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string CsvTable::str() const {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += '\n';
    for (const auto& r : rows) {
        if (r.size() != header.size()) throw DimensionMismatch("ragged CSV row");
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) out += ',';
            out += format_number(r[i]);
        }
        out += '\n';
    }
    return out;
}

Matrix model_hamiltonian(const RunConfig& cfg) {
    TwoQubitSystem s;
    s.ep1 = cfg.onsite.ep1;
    s.ep2 = cfg.onsite.ep2;
    s.ep1p = cfg.onsite.ep1p;
    s.ep2p = cfg.onsite.ep2p;
    s.ts12 = cfg.ts12;
    s.ts1p2p = cfg.ts1p2p;
    const Geometry& g = cfg.geometry;
    s.coulomb = cfg.layout == Layout::Parallel ? coulomb_parallel(g.d, g.ab(), g.q) : coulomb_angled(g);
    return build_two_qubit_hamiltonian(s);
}

std::array<double, 5> spectrum_point(const RunConfig& cfg, double x) {
    const Spectrum sp = eigh(model_hamiltonian(at_axis(cfg, x)));
    std::array<double, 5> r{};
    std::copy(sp.values.begin(), sp.values.end(), r.begin());
    r[4] = std::min({r[1] - r[0], r[2] - r[1], r[3] - r[2]});
    return r;
}

CsvTable spectrum_sweep_serial(const RunConfig& cfg) { return spectrum_sweep(cfg, 1); }

CsvTable spectrum_sweep_parallel(const RunConfig& cfg, int threads) {
    return spectrum_sweep(cfg, std::max(2, threads));
}

CsvTable run(const RunConfig& cfg, int threads) {
    switch (cfg.command) {
        case Command::SpectrumSweep:
        case Command::AngleSweep:
            return spectrum_sweep(cfg, threads);
        case Command::Evolve:
            return time_table(cfg, threads,
                              {"re1", "im1", "re2", "im2", "re3", "im3", "re4", "im4", "p11", "p12", "p21", "p22",
                               "pA1", "pB1"},
                              evolve_row);
        case Command::Entropy:
            return time_table(cfg, threads, {"S_B", "purity_A", "purity_B"}, entropy_row);
        case Command::Correlation: {
            CsvTable t = time_table(cfg, threads, {"f_C"}, correlation_row);
            t.header.insert(t.header.end(), {"f_mean", "gate"});
            double acc = 0.0;
            for (size_t i = 0; i < t.rows.size(); ++i) {
                acc += t.rows[i][1];
                const double mean = acc / static_cast<double>(i + 1);
                t.rows[i].push_back(mean);
                t.rows[i].push_back(gate_code(classify_gate({mean})));
            }
            return t;
        }
        case Command::Design:
            return design_table(cfg);
        case Command::Cool:
            return cool_table(cfg);
    }
    return {};
}

}  // namespace qswap
