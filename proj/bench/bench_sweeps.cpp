// Serial reference vs OpenMP sweep kernel on a dense angle sweep.
#include "qswap/sweeps.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

int main(int argc, char** argv) {
    const int count = argc > 1 ? std::atoi(argv[1]) : 200000;
    qswap::RunConfig cfg = qswap::parse_config("d = 1\nab = 0.8\nq = 1\nep1 = 1\nep2 = -1\nep1p = -3\nep2p = -2\n",
                                               qswap::Command::AngleSweep);
    cfg.count = count;

    using clock = std::chrono::steady_clock;
    auto time = [](auto&& f) {
        const auto t0 = clock::now();
        auto r = f();
        return std::make_pair(std::chrono::duration<double>(clock::now() - t0).count(), std::move(r));
    };

    const auto [ts, serial] = time([&] { return qswap::spectrum_sweep_serial(cfg); });
    std::printf("points %d\nserial    %8.3f s\n", count, ts);
    for (int th : {2, 4, 8, omp_get_max_threads()}) {
        const auto [tp, par] = time([&] { return qswap::spectrum_sweep_parallel(cfg, th); });
        std::printf("threads %2d %8.3f s  speedup %5.2f  identical %s\n", th, tp, ts / tp,
                    par.rows == serial.rows ? "yes" : "NO");
    }
}
