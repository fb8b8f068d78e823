#pragma once

#include "qswap/dynamics.hpp"
#include "qswap/gate.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace qswap {

struct ConfigError : std::runtime_error {
    ConfigError(const std::string& msg, int line = 0, std::string key = {});
    int line;         // 0 when the problem is not tied to one line
    std::string key;
};

enum class Command { SpectrumSweep, AngleSweep, Evolve, Entropy, Correlation, Design, Cool };

Command parse_command(const std::string& name);
std::string command_name(Command c);

enum class Layout { Parallel, Angled };
enum class Spacing { Linear, Log };
enum class DesignKind { Symmetric, Angled, Antiswap };

struct RunConfig {
    Command command = Command::SpectrumSweep;
    double hbar = 1.0;

    // geometry; only a + b enters, stored split evenly
    Geometry geometry;
    Layout layout = Layout::Parallel;

    // two-qubit model
    OnSite onsite;
    double ts12 = 1.0, ts1p2p = 1.0;

    // sweep axis
    std::string axis = "d";
    double start = 0.0, stop = 0.0;
    int count = 256;
    Spacing spacing = Spacing::Linear;

    // time grid
    double t0 = 0.0, t1 = 0.0;
    int steps = 1000;

    // initial state: basis index 1..4, or amplitudes over the ascending eigenbasis
    int basis = 0;
    EigenbasisAmplitudes amps;

    DesignKind design = DesignKind::Symmetric;

    // cooling
    SymmetricSwapParams swap;
    CoolingSchedule schedule;
    int start_label = 1;

    std::vector<double> axis_values() const;
};

RunConfig parse_config(const std::string& text, Command command);
RunConfig load_config(const std::string& path, Command command);

}  // namespace qswap
