// Timing harness: FFT ambiguity grid vs the serial reference grid, and
// multi-worker search vs a single worker on the same plan.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cazac/correlate.hpp"
#include "cazac/families.hpp"
#include "cazac/search.hpp"

using namespace cazac;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_grids(int n, int reps) {
    const ComplexSeq x = quadratic_phase({QuadraticFamily::P4, n, 0}).seq();

    auto t0 = std::chrono::steady_clock::now();
    AmbiguityGrid fast = periodic_ambiguity(x);
    for (int r = 1; r < reps; ++r) fast = periodic_ambiguity(x);
    const double t_fast = seconds_since(t0) / reps;

    t0 = std::chrono::steady_clock::now();
    AmbiguityGrid naive = periodic_ambiguity_naive(x);
    for (int r = 1; r < reps; ++r) naive = periodic_ambiguity_naive(x);
    const double t_naive = seconds_since(t0) / reps;

    double max_abs_diff = 0.0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            max_abs_diff = std::max(max_abs_diff, std::abs(fast.at(k, l) - naive.at(k, l)));

    std::printf("grid     n=%-4d reps=%-3d fft=%.6fs naive=%.6fs speedup=%5.1fx maxdiff=%.2e\n",
                n, reps, t_fast, t_naive, t_naive / t_fast, max_abs_diff);
}

void bench_search(int n, long long trials) {
    SearchPlan plan;
    plan.n = n;
    plan.trials = trials;
    plan.seed = 42;

    const auto t0 = std::chrono::steady_clock::now();
    const SearchReport serial = run_search(plan, 1);
    const double t_serial = seconds_since(t0);

    const int workers = omp_get_max_threads();
    const auto t1 = std::chrono::steady_clock::now();
    const SearchReport parallel = run_search(plan, workers);
    const double t_parallel = seconds_since(t1);

    const bool same = serial.unique.size() == parallel.unique.size() &&
                      serial.converged == parallel.converged;
    std::printf("search   n=%-4d trials=%-7lld 1w=%.3fs %dw=%.3fs speedup=%5.2fx unique=%zu "
                "identical=%s\n",
                n, trials, t_serial, workers, t_parallel, t_serial / t_parallel,
                serial.unique.size(), same ? "yes" : "NO");
    if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    // Optional scale factor so CI can run a quick pass.
    const double scale = argc > 1 ? std::atof(argv[1]) : 1.0;

    std::printf("threads available: %d\n", omp_get_max_threads());
    bench_grids(64, std::max(1, static_cast<int>(200 * scale)));
    bench_grids(128, std::max(1, static_cast<int>(50 * scale)));
    bench_grids(256, std::max(1, static_cast<int>(20 * scale)));
    bench_grids(512, std::max(1, static_cast<int>(5 * scale)));

    bench_search(7, std::max(1LL, static_cast<long long>(2000 * scale)));
    bench_search(10, std::max(1LL, static_cast<long long>(1000 * scale)));
    return 0;
}
