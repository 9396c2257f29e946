// Throughput check: the OpenMP trial runner against the serial reference.
// Also asserts the two produce the exact same aggregate, which the design
// guarantees (exact integer totals, per-trial seeding).
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "dpqlab/trials.hpp"

using namespace dpqlab;
using namespace dpqlab::experiments;

namespace {

double seconds_of(const std::chrono::steady_clock::duration& d) {
    return std::chrono::duration<double>(d).count();
}

template <typename F>
std::pair<TrialAggregate, double> timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    TrialAggregate agg = f();
    const auto t1 = std::chrono::steady_clock::now();
    return {std::move(agg), seconds_of(t1 - t0)};
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 1000;
    std::uint64_t trials = 20000;
    std::uint64_t seed = 42;
    if (argc > 1) n = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) trials = std::strtoull(argv[2], nullptr, 10);
    if (argc > 3) seed = std::strtoull(argv[3], nullptr, 10);

    const TrialPlan plan{Algorithm::dual, n, trials, seed};

    const auto [serial, serial_s] = timed([&] { return run_trials_serial(plan); });
    const auto [parallel, parallel_s] = timed([&] { return run_trials(plan); });

    std::printf("n=%zu trials=%" PRIu64 " seed=%" PRIu64 "\n", n, trials, seed);
    std::printf("serial:   %8.3f s  (%.0f trials/s)\n", serial_s,
                static_cast<double>(trials) / serial_s);
    std::printf("parallel: %8.3f s  (%.0f trials/s, speedup %.2fx)\n", parallel_s,
                static_cast<double>(trials) / parallel_s, serial_s / parallel_s);

    if (!(serial == parallel)) {
        std::printf("MISMATCH: serial and parallel aggregates differ\n");
        return 1;
    }
    std::printf("aggregates identical: yes\n");
    return 0;
}
