// Throughput comparison: serial reference loop vs the OpenMP fan-out
// used by the verify/search harnesses. Both paths call the same pure
// engine; the benchmark checks they produce identical gap values before
// reporting timings.

#include "gapset/bounds.hpp"
#include "gapset/rng.hpp"
#include "gapset/semigroup.hpp"
#include "gapset/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

using namespace gapset;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 400;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;

    std::vector<IntervalUnion> corpus;
    corpus.reserve(n);
    for (int i = 0; i < n; ++i) {
        TrialRng rng(seed, static_cast<std::uint64_t>(i));
        corpus.push_back(random_grid_union(rng));
    }

    std::vector<Rational> serial(n), parallel(n);

    const auto t_serial = Clock::now();
    for (int i = 0; i < n; ++i) serial[i] = gap(corpus[i]).gap;
    const double s_serial = seconds_since(t_serial);

    const auto t_parallel = Clock::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < n; ++i) parallel[i] = gap(corpus[i]).gap;
    const double s_parallel = seconds_since(t_parallel);

    for (int i = 0; i < n; ++i) {
        if (serial[i] != parallel[i]) {
            std::fprintf(stderr, "mismatch at set %d\n", i);
            return 1;
        }
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("sets            %d\n", n);
    std::printf("threads         %d\n", threads);
    std::printf("serial          %.3f s  (%.1f sets/s)\n", s_serial, n / s_serial);
    std::printf("openmp          %.3f s  (%.1f sets/s)\n", s_parallel, n / s_parallel);
    std::printf("speedup         %.2fx\n", s_serial / s_parallel);
    return 0;
}
