#pragma once

#include "gapset/interval.hpp"

#include <cstdint>
#include <stdexcept>

namespace gapset {

/// Engine refused the input: the common-denominator grid over (0, B]
/// would exceed the configured cell limit.
struct grid_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fixpoint failed to stabilize within the iteration cap; indicates an
/// engine bug, never a property of the input.
struct iteration_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SemigroupOptions {
    std::int64_t max_grid_cells = 10'000'000;
    std::int64_t iteration_cap_factor = 10;  // cap = factor * B * q
};

/// S(A) ∩ (0, B]. `set` holds the open part clipped to (0, B);
/// covers_bound records whether B itself is representable (some h-fold
/// interval straddles B). `iterations` counts fixpoint rounds.
struct TruncatedSemigroup {
    IntervalUnion set;
    bool covers_bound = false;
    std::int64_t iterations = 0;
};

/// Exact gap value G(A) with its certificate.
struct GapResult {
    Rational gap;
    Rational truncation_bound;
    ClosedRemnant remnant;  // non-representable points in [0, B]
    std::int64_t iterations = 0;
};

/// Exact h-fold sumset hA. Requires A non-empty, h >= 1.
IntervalUnion h_fold(const IntervalUnion& a, std::int64_t h);

/// min over parts (b,g) of floor(g/(g-b)) * b; an upper bound for G(A)
/// since every u above it is a sum of elements of a single part.
/// Requires A non-empty with parts inside [0, 1].
Rational safe_bound(const IntervalUnion& a);

/// Least fixpoint of S <- (S ∪ (S+A)) ∩ (0,B] starting from A ∩ (0,B].
/// All elements are positive, so truncation never loses reachable points
/// below B. Requires A non-empty, A ⊆ (0,1), B > 0.
TruncatedSemigroup truncated_semigroup(const IntervalUnion& a, const Rational& bound,
                                       const SemigroupOptions& opts = {});

/// Exact G(A) = sup{u : u ∉ S(A)} for non-empty open A ⊆ (0,1).
/// When S(A) covers all of (0, B] the sup runs over the empty set; this
/// engine returns 0 by convention (only happens when inf A = 0).
GapResult gap(const IntervalUnion& a, const SemigroupOptions& opts = {});

/// True iff u ∈ S(A). Requires u > 0.
bool is_representable(const IntervalUnion& a, const Rational& u,
                      const SemigroupOptions& opts = {});

/// mes(S(A) ∩ (j-1, j)). Requires sup A = 1, j >= 1.
Rational sj_slice(const IntervalUnion& a, std::int64_t j, const SemigroupOptions& opts = {});

}  // namespace gapset
