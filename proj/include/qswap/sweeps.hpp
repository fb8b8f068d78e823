#pragma once

#include "qswap/config.hpp"

#include <array>
#include <string>
#include <vector>

namespace qswap {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::string str() const;  // header + rows, 12 significant digits, LF
};

std::string format_number(double x);

Matrix model_hamiltonian(const RunConfig& cfg);

// One sweep point: E1..E4 ascending and the smallest adjacent gap.
std::array<double, 5> spectrum_point(const RunConfig& cfg, double x);

// Reference loop and OpenMP kernel over the same per-point function; rows come back in index order.
CsvTable spectrum_sweep_serial(const RunConfig& cfg);
CsvTable spectrum_sweep_parallel(const RunConfig& cfg, int threads);

// Dispatch on cfg.command. threads <= 1 runs the serial path.
CsvTable run(const RunConfig& cfg, int threads = 1);

}  // namespace qswap
