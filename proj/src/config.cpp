#include "qswap/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace qswap {

namespace {

const std::map<std::string, Command> kCommands = {
    {"spectrum-sweep", Command::SpectrumSweep}, {"angle-sweep", Command::AngleSweep},
    {"evolve", Command::Evolve},                {"entropy", Command::Entropy},
    {"correlation", Command::Correlation},      {"design", Command::Design},
    {"cool", Command::Cool},
};

const std::set<std::string> kModelKeys = {"hbar", "d", "ab", "alpha", "q", "layout",
                                          "ep1", "ep2", "ep1p", "ep2p", "ts12", "ts1p2p"};
const std::set<std::string> kStateKeys = {"t0", "t1", "steps", "basis", "c1", "c2", "c3", "c4",
                                          "phi1", "phi2", "phi3", "phi4"};

std::set<std::string> allowed_keys(Command c) {
    std::set<std::string> k = kModelKeys;
    switch (c) {
        case Command::SpectrumSweep:
            k.insert({"axis", "start", "stop", "count", "spacing"});
            break;
        case Command::AngleSweep:
            k.insert({"start", "stop", "count"});
            k.erase("layout");
            k.erase("alpha");
            break;
        case Command::Evolve:
        case Command::Entropy:
        case Command::Correlation:
            k.insert(kStateKeys.begin(), kStateKeys.end());
            break;
        case Command::Design:
            k = {"design", "d", "ab", "alpha", "q", "ep1", "ep2", "ep2p"};
            break;
        case Command::Cool:
            k = {"hbar", "vs", "ts", "ec1", "ec2", "f", "duration", "omega", "drive", "steps", "start_label"};
            break;
    }
    return k;
}

std::set<std::string> required_keys(Command c) {
    switch (c) {
        case Command::SpectrumSweep: return {"axis", "start", "stop"};
        case Command::Evolve:
        case Command::Entropy:
        case Command::Correlation: return {"t1"};
        case Command::Design: return {"design"};
        case Command::Cool: return {"f", "duration"};
        default: return {};
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string value;
    int line;
};

class Reader {
public:
    explicit Reader(std::map<std::string, Entry> e) : e_(std::move(e)) {}

    bool has(const std::string& k) const { return e_.count(k) != 0; }

    double num(const std::string& k, double fallback) const {
        auto it = e_.find(k);
        if (it == e_.end()) return fallback;
        const std::string& v = it->second.value;
        double x = 0.0;
        const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(x))
            throw ConfigError("value '" + v + "' is not a finite number", it->second.line, k);
        return x;
    }

    int integer(const std::string& k, int fallback) const {
        auto it = e_.find(k);
        if (it == e_.end()) return fallback;
        const std::string& v = it->second.value;
        int x = 0;
        const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc() || p != v.data() + v.size())
            throw ConfigError("value '" + v + "' is not an integer", it->second.line, k);
        return x;
    }

    template <class T>
    T choice(const std::string& k, const std::map<std::string, T>& opts, T fallback) const {
        auto it = e_.find(k);
        if (it == e_.end()) return fallback;
        auto o = opts.find(it->second.value);
        if (o == opts.end()) {
            std::string names;
            for (const auto& [n, _] : opts) names += (names.empty() ? "" : ", ") + n;
            throw ConfigError("value '" + it->second.value + "' not one of {" + names + "}", it->second.line, k);
        }
        return o->second;
    }

    std::string str(const std::string& k, const std::string& fallback) const {
        auto it = e_.find(k);
        return it == e_.end() ? fallback : it->second.value;
    }

    [[noreturn]] void fail(const std::string& k, const std::string& msg) const {
        auto it = e_.find(k);
        throw ConfigError(msg, it == e_.end() ? 0 : it->second.line, k);
    }

private:
    std::map<std::string, Entry> e_;
};

void positive(const Reader& r, const std::string& k, double v) {
    if (!(v > 0.0)) r.fail(k, k + " must be positive");
}

}  // namespace

ConfigError::ConfigError(const std::string& msg, int l, std::string k)
    : std::runtime_error((l > 0 ? "line " + std::to_string(l) + ": " : std::string()) +
                         (k.empty() ? "" : "'" + k + "': ") + msg),
      line(l),
      key(std::move(k)) {}

Command parse_command(const std::string& name) {
    auto it = kCommands.find(name);
    if (it == kCommands.end()) throw ConfigError("unknown command '" + name + "'");
    return it->second;
}

std::string command_name(Command c) {
    for (const auto& [n, v] : kCommands)
        if (v == c) return n;
    return "?";
}

std::vector<double> RunConfig::axis_values() const {
    std::vector<double> v(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double u = static_cast<double>(k) / (count - 1);
        v[static_cast<size_t>(k)] = spacing == Spacing::Log ? start * std::pow(stop / start, u)
                                                            : start + (stop - start) * u;
    }
    v.back() = stop;
    return v;
}

RunConfig parse_config(const std::string& text, Command command) {
    const auto allowed = allowed_keys(command);
    std::map<std::string, Entry> entries;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError("missing key", line);
        if (!allowed.count(key))
            throw ConfigError("unknown key for " + command_name(command), line, key);
        if (value.empty()) throw ConfigError("missing value", line, key);
        if (entries.count(key)) throw ConfigError("duplicate key", line, key);
        entries[key] = {value, line};
    }
    for (const auto& k : required_keys(command))
        if (!entries.count(k)) throw ConfigError("missing required key", 0, k);

    const Reader r(std::move(entries));
    RunConfig c;
    c.command = command;
    c.hbar = r.num("hbar", 1.0);
    positive(r, "hbar", c.hbar);

    const double ab = r.num("ab", c.geometry.ab());
    c.geometry.a = c.geometry.b = 0.5 * ab;
    c.geometry.d = r.num("d", c.geometry.d);
    c.geometry.alpha = r.num("alpha", 0.0);
    c.geometry.q = r.num("q", 1.0);
    c.layout = r.choice<Layout>("layout", {{"parallel", Layout::Parallel}, {"angled", Layout::Angled}},
                                Layout::Parallel);

    c.onsite = {r.num("ep1", 0.0), r.num("ep2", 0.0), r.num("ep1p", 0.0), r.num("ep2p", 0.0)};
    c.ts12 = r.num("ts12", 1.0);
    c.ts1p2p = r.num("ts1p2p", 1.0);

    switch (command) {
        case Command::AngleSweep:
            c.layout = Layout::Angled;
            c.axis = "alpha";
            c.start = r.num("start", -std::numbers::pi);
            c.stop = r.num("stop", std::numbers::pi);
            break;
        case Command::SpectrumSweep:
            c.axis = r.str("axis", "d");
            if (!std::set<std::string>{"d", "ab", "alpha", "q", "ts", "ts12", "ts1p2p"}.count(c.axis))
                r.fail("axis", "axis must be one of d, ab, alpha, q, ts, ts12, ts1p2p");
            c.start = r.num("start", 0.0);
            c.stop = r.num("stop", 0.0);
            c.spacing = r.choice<Spacing>("spacing", {{"linear", Spacing::Linear}, {"log", Spacing::Log}},
                                          Spacing::Linear);
            if (c.spacing == Spacing::Log && !(c.start > 0.0 && c.stop > 0.0))
                r.fail("spacing", "log spacing needs positive start and stop");
            break;
        default:
            break;
    }
    c.count = r.integer("count", 256);
    if (c.count < 2) r.fail("count", "count must be at least 2");

    if (command == Command::Evolve || command == Command::Entropy || command == Command::Correlation) {
        c.t0 = r.num("t0", 0.0);
        c.t1 = r.num("t1", 0.0);
        if (!(c.t1 > c.t0)) r.fail("t1", "t1 must exceed t0");
        const bool any_amp = r.has("c1") || r.has("c2") || r.has("c3") || r.has("c4");
        if (r.has("basis") == any_amp) r.fail("basis", "give exactly one of basis or c1..c4");
        if (r.has("basis")) {
            c.basis = r.integer("basis", 1);
            if (c.basis < 1 || c.basis > 4) r.fail("basis", "basis must be 1..4");
        } else {
            double n = 0.0;
            for (int k = 0; k < 4; ++k) {
                const auto idx = std::to_string(k + 1);
                c.amps.c[static_cast<size_t>(k)] = r.num("c" + idx, 0.0);
                c.amps.phi[static_cast<size_t>(k)] = r.num("phi" + idx, 0.0);
                n += c.amps.c[static_cast<size_t>(k)] * c.amps.c[static_cast<size_t>(k)];
            }
            if (std::abs(n - 1.0) > 1e-10) r.fail("c1", "amplitudes must satisfy c1^2 + ... + c4^2 = 1");
        }
    }
    if (command != Command::Cool) {
        c.steps = r.integer("steps", 1000);
        if (c.steps < 1) r.fail("steps", "steps must be at least 1");
    }

    if (command == Command::Design) {
        c.design = r.choice<DesignKind>(
            "design",
            {{"symmetric", DesignKind::Symmetric}, {"angled", DesignKind::Angled}, {"antiswap", DesignKind::Antiswap}},
            DesignKind::Symmetric);
        // pinned pair defaults to 1 as in the reference designs
        c.onsite = {r.num("ep1", 1.0), r.num("ep2", 1.0), 0.0, r.num("ep2p", 1.0)};
        const bool swap = c.design != DesignKind::Antiswap;
        if (swap && r.has("ep1")) r.fail("ep1", "swap designs pin ep2 and ep2p");
        if (!swap && r.has("ep2")) r.fail("ep2", "antiswap design pins ep1 and ep2p");
    }

    if (command == Command::Cool) {
        c.hbar = r.num("hbar", 1.0);
        c.swap = {r.num("vs", 0.0), r.num("ts", 1.0), r.num("ec1", 1.0), r.num("ec2", 0.5)};
        c.schedule.f_amplitude = r.num("f", 0.0);
        c.schedule.duration = r.num("duration", 1.0);
        positive(r, "duration", c.schedule.duration);
        c.schedule.omega = r.num("omega", -1.0);
        c.schedule.sign = r.choice<Drive>("drive", {{"cool", Drive::Cool}, {"heat", Drive::Heat}}, Drive::Cool);
        c.schedule.steps = r.integer("steps", 1000);
        if (c.schedule.steps < 1) r.fail("steps", "steps must be at least 1");
        c.start_label = r.integer("start_label", 1);
        if (c.start_label < 1 || c.start_label > 4) r.fail("start_label", "start_label must be 1..4");
    }
    if (command != Command::Cool && command != Command::Design) {
        positive(r, "d", c.geometry.d);
        positive(r, "ab", c.geometry.ab());
    }
    return c;
}

RunConfig load_config(const std::string& path, Command command) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), command);
}

}  // namespace qswap
