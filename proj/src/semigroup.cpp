#include "gapset/semigroup.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <utility>

namespace gapset {

namespace {

void require_inside_unit(const IntervalUnion& a) {
    if (a.empty()) throw std::invalid_argument("set must be non-empty");
    if (a.inf() < 0 || a.sup() > 1)
        throw std::invalid_argument("set must be contained in (0,1)");
}

// lcm of all endpoint denominators; the grid on which every endpoint of
// every intermediate union lies.
Integer grid_denominator(const IntervalUnion& a, const Rational& bound) {
    Integer q = denominator(bound);
    for (const auto& p : a.parts()) {
        q = boost::integer::lcm(q, denominator(p.lo));
        q = boost::integer::lcm(q, denominator(p.hi));
    }
    return q;
}

// U ∩ (0, B) as parts, plus whether some part straddles B.
std::pair<IntervalUnion, bool> clip_below(const IntervalUnion& u, const Rational& bound) {
    bool straddles = false;
    std::vector<OpenInterval> parts;
    for (const auto& p : u.parts()) {
        if (p.lo < bound && bound < p.hi) straddles = true;
        if (p.lo >= bound) break;
        parts.push_back({p.lo, std::min(p.hi, bound)});
    }
    return {IntervalUnion::normalized(std::move(parts)), straddles};
}

}  // namespace

IntervalUnion h_fold(const IntervalUnion& a, std::int64_t h) {
    if (a.empty()) throw std::invalid_argument("h_fold of empty set");
    if (h < 1) throw std::invalid_argument("h_fold requires h >= 1");
    IntervalUnion acc = a;
    for (std::int64_t i = 1; i < h; ++i) acc = minkowski_sum(acc, a);
    return acc;
}

Rational safe_bound(const IntervalUnion& a) {
    require_inside_unit(a);
    bool have = false;
    Rational best = 0;
    for (const auto& p : a.parts()) {
        const Rational b = Rational(floor_int(p.hi / (p.hi - p.lo))) * p.lo;
        if (!have || b < best) {
            best = b;
            have = true;
        }
    }
    return best;
}

TruncatedSemigroup truncated_semigroup(const IntervalUnion& a, const Rational& bound,
                                       const SemigroupOptions& opts) {
    require_inside_unit(a);
    if (bound <= 0) throw std::invalid_argument("truncation bound must be positive");

    const Integer q = grid_denominator(a, bound);
    const Integer cells = ceil_int(bound * Rational(q));
    if (cells > opts.max_grid_cells)
        throw grid_limit_error("grid of " + cells.str() + " cells exceeds limit of " +
                               std::to_string(opts.max_grid_cells));
    const Integer cap_big = cells * opts.iteration_cap_factor;
    const std::int64_t cap = std::max<std::int64_t>(16, cap_big.convert_to<std::int64_t>());

    TruncatedSemigroup out;
    auto [state, covers] = clip_below(a, bound);
    out.set = std::move(state);
    out.covers_bound = covers;
    if (out.set.empty()) return out;  // A entirely above the bound except maybe at B

    for (;;) {
        const IntervalUnion sums = minkowski_sum(out.set, a);
        auto [clipped, straddles] = clip_below(sums, bound);
        out.covers_bound = out.covers_bound || straddles;

        std::vector<OpenInterval> merged(out.set.parts());
        merged.insert(merged.end(), clipped.parts().begin(), clipped.parts().end());
        IntervalUnion next = IntervalUnion::normalized(std::move(merged));

        ++out.iterations;
        if (next == out.set) break;
        out.set = std::move(next);
        if (out.iterations > cap)
            throw iteration_cap_error("semigroup fixpoint exceeded " + std::to_string(cap) +
                                      " rounds");
    }
    return out;
}

GapResult gap(const IntervalUnion& a, const SemigroupOptions& opts) {
    require_inside_unit(a);
    const Rational bound = safe_bound(a);
    if (bound == 0) {
        // some part touches 0, so S(A) = (0, inf); sup over the empty set,
        // returned as 0 by convention
        return {Rational(0), Rational(0), ClosedRemnant{}, 0};
    }

    const TruncatedSemigroup ts = truncated_semigroup(a, bound, opts);
    ClosedRemnant remnant = complement_within(ts.set, Rational(0), bound);
    if (ts.covers_bound && !remnant.pieces.empty() && remnant.pieces.back().lo == bound)
        remnant.pieces.pop_back();

    GapResult out;
    out.truncation_bound = bound;
    out.iterations = ts.iterations;
    out.gap = remnant.pieces.empty() ? Rational(0) : remnant.pieces.back().hi;
    out.remnant = std::move(remnant);
    return out;
}

bool is_representable(const IntervalUnion& a, const Rational& u, const SemigroupOptions& opts) {
    if (u <= 0) throw std::invalid_argument("is_representable requires u > 0");
    require_inside_unit(a);
    const Rational sb = safe_bound(a);
    if (u > sb) return true;  // everything above the single-interval bound is reachable
    const Rational bound = std::max(u, sb);
    const TruncatedSemigroup ts = truncated_semigroup(a, bound, opts);
    if (u == bound) return ts.covers_bound || ts.set.contains(u);
    return ts.set.contains(u);
}

Rational sj_slice(const IntervalUnion& a, std::int64_t j, const SemigroupOptions& opts) {
    require_inside_unit(a);
    if (j < 1) throw std::invalid_argument("sj_slice requires j >= 1");
    if (a.sup() != 1) throw std::invalid_argument("sj_slice requires sup A = 1");

    const Rational bound = std::max(Rational(j), safe_bound(a));
    const TruncatedSemigroup ts = truncated_semigroup(a, bound, opts);
    Rational m = 0;
    for (const auto& p : ts.set.parts()) {
        const Rational lo = std::max(p.lo, Rational(j - 1));
        const Rational hi = std::min(p.hi, Rational(j));
        if (lo < hi) m += hi - lo;
    }
    return m;
}

}  // namespace gapset
