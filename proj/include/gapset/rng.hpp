#pragma once

#include "gapset/rational.hpp"

#include <cstdint>

namespace gapset {

/// Splittable counter-based RNG: each trial gets an independent stream
/// derived from (seed, trial index), so parallel and serial runs draw
/// identical values. splitmix64 core.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial_index)
        : state_(mix(seed ^ mix(trial_index + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform grid rational k/q with k in [lo_num, hi_num].
    Rational grid(std::int64_t lo_num, std::int64_t hi_num, std::int64_t q) {
        return Rational(range(lo_num, hi_num), q);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace gapset
