// qswap: sweeps, time evolution and gate design from flat key = value configs.
#include "qswap/designer.hpp"
#include "qswap/sweeps.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kNumericError = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Electrostatic qubit swap gate toolkit"};
    app.require_subcommand(1);
    std::string config_path, out_path;
    int threads = 1;

    const char* commands[][2] = {
        {"spectrum-sweep", "eigenvalues along one parameter axis"},
        {"angle-sweep", "eigenvalues against the angle of the second qubit"},
        {"evolve", "amplitudes and occupancies over a time grid"},
        {"entropy", "entanglement entropy and purities over a time grid"},
        {"correlation", "correlation function and gate classification"},
        {"design", "quasi-classical potential design"},
        {"cool", "cooling/heating drive populations"},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("--config", config_path, "key = value config file")->required();
        sub->add_option("--out", out_path, "CSV output path (stdout when omitted)");
        sub->add_option("--threads", threads, "worker threads for sweep points")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const qswap::RunConfig cfg = qswap::load_config(config_path, qswap::parse_command(name));
        const std::string csv = qswap::run(cfg, threads).str();
        if (out_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "qswap: cannot write '" << out_path << "'\n";
                return kConfigError;
            }
            f << csv;
        }
    } catch (const qswap::ConfigError& e) {
        std::cerr << "qswap: config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "qswap: numeric error: " << e.what() << '\n';
        return kNumericError;
    }
    return kOk;
}
