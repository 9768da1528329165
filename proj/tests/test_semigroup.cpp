#include "gapset/constructions.hpp"
#include "gapset/rng.hpp"
#include "gapset/semigroup.hpp"
#include "gapset/verify.hpp"

#include <doctest.h>

using namespace gapset;

namespace {

Rational q(const char* s) { return parse_rational(s); }

IntervalUnion make(std::initializer_list<std::pair<const char*, const char*>> ivs) {
    std::vector<OpenInterval> parts;
    for (const auto& [lo, hi] : ivs) parts.push_back({q(lo), q(hi)});
    return IntervalUnion::normalized(std::move(parts));
}

}  // namespace

TEST_CASE("h_fold") {
    CHECK(h_fold(make({{"1/3", "1/2"}}), 3) == make({{"1", "3/2"}}));
    const auto a = make({{"1/5", "2/5"}});
    CHECK(h_fold(a, 1) == a);
    CHECK(h_fold(make({{"1/4", "1/2"}, {"1/2", "1"}}), 2) == make({{"1/2", "2"}}));
    CHECK_THROWS_AS(h_fold(a, 0), std::invalid_argument);
}

TEST_CASE("safe_bound") {
    CHECK(safe_bound(make({{"1/3", "1/2"}})) == 1);
    CHECK(safe_bound(make({{"2/3", "1"}})) == 2);
    CHECK(safe_bound(make({{"1/3", "1/2"}, {"3/4", "1"}})) == 1);
    CHECK_THROWS_AS(safe_bound(IntervalUnion{}), std::invalid_argument);
    CHECK_THROWS_AS(safe_bound(make({{"1/2", "3/2"}})), std::invalid_argument);
}

TEST_CASE("truncated_semigroup") {
    const auto s = truncated_semigroup(make({{"1/2", "1"}}), 3);
    CHECK(s.set == make({{"1/2", "1"}, {"1", "3"}}));

    CHECK(truncated_semigroup(make({{"0", "1"}}), 2).set == make({{"0", "2"}}));

    const auto ex2 = example2(q("3/4")).set;
    CHECK(truncated_semigroup(ex2, 1).set == make({{"1/4", "1/2"}, {"1/2", "1"}}));
}

TEST_CASE("gap on the paper families") {
    CHECK(gap(example1(q("1/3")).set).gap == 2);
    CHECK(gap(example2(q("3/4")).set).gap == q("1/2"));
    CHECK(gap(example3(q("5/12")).set).gap == q("5/4"));
    CHECK(gap(make({{"0", "1"}})).gap == 0);
}

TEST_CASE("gap certificate invariants") {
    const GapResult g = gap(example2(q("3/4")).set);
    CHECK(g.truncation_bound == q("1/2"));
    CHECK(g.gap <= g.truncation_bound);
    REQUIRE(!g.remnant.empty());
    CHECK(g.remnant.pieces.back().hi == g.gap);
}

TEST_CASE("is_representable") {
    const auto a = make({{"1/2", "1"}});
    CHECK(!is_representable(a, 1));
    CHECK(is_representable(a, q("3/2")));
    CHECK(!is_representable(example2(q("3/4")).set, q("1/2")));
    CHECK_THROWS_AS(is_representable(a, 0), std::invalid_argument);
}

TEST_CASE("sj_slice") {
    CHECK(sj_slice(make({{"1/2", "1"}}), 1) == q("1/2"));
    CHECK(sj_slice(make({{"1/2", "1"}}), 2) == 1);
    CHECK(sj_slice(make({{"2/3", "1"}}), 2) == q("2/3"));
    CHECK_THROWS_AS(sj_slice(make({{"1/2", "3/4"}}), 1), std::invalid_argument);
}

TEST_CASE("engine guards") {
    SemigroupOptions tight;
    tight.max_grid_cells = 4;
    CHECK_THROWS_AS(gap(make({{"47/48", "1"}}), tight), grid_limit_error);
}

TEST_CASE("property: h_fold satisfies the recursion") {
    for (int trial = 0; trial < 40; ++trial) {
        TrialRng rng(21, trial);
        const IntervalUnion a = random_grid_union(rng, 4);
        IntervalUnion fold = a;
        for (int h = 1; h <= 6; ++h) {
            const IntervalUnion next = minkowski_sum(fold, a);
            CHECK(h_fold(a, h + 1) == next);
            fold = next;
        }
    }
}

TEST_CASE("property: truncation is consistent across bounds") {
    for (int trial = 0; trial < 40; ++trial) {
        TrialRng rng(22, trial);
        const IntervalUnion a = random_grid_union(rng);
        const Rational b = safe_bound(a);
        if (b < Rational(1, 2)) continue;
        const Rational b2 = b / 2;
        const auto big = truncated_semigroup(a, b);
        const auto small = truncated_semigroup(a, b2);
        CHECK(intersect_open(big.set, 0, b2) == intersect_open(small.set, 0, b2));
    }
}

TEST_CASE("property: truncated semigroup is closed under addition") {
    for (int trial = 0; trial < 40; ++trial) {
        TrialRng rng(23, trial);
        const IntervalUnion a = random_grid_union(rng);
        const Rational b = safe_bound(a);
        if (b <= 1) continue;
        const IntervalUnion s = truncated_semigroup(a, b).set;
        const IntervalUnion doubled = intersect_open(minkowski_sum(s, s), 0, b - 1);
        CHECK(is_subset(doubled, s));
    }
}

TEST_CASE("property: gap scales linearly") {
    for (int trial = 0; trial < 40; ++trial) {
        TrialRng rng(24, trial);
        const IntervalUnion a = random_grid_union(rng);
        const Rational c(rng.range(1, 8), 8);
        CHECK(gap(scale(a, c)).gap == c * gap(a).gap);
    }
}

TEST_CASE("property: gap is antitone under inclusion") {
    for (int trial = 0; trial < 40; ++trial) {
        TrialRng rng(25, trial);
        const IntervalUnion a = random_grid_union(rng);
        // shrink: drop parts after a random prefix and trim the first part
        std::vector<OpenInterval> kept(a.parts().begin(),
                                       a.parts().begin() + 1 + rng.below(a.part_count()));
        const Rational len = kept.front().length();
        kept.front().lo += len * Rational(rng.range(0, 2), 4);
        const IntervalUnion sub = IntervalUnion::normalized(std::move(kept));
        CHECK(gap(sub).gap >= gap(a).gap);
    }
}

TEST_CASE("property: gap is at least inf A") {
    for (int trial = 0; trial < 60; ++trial) {
        TrialRng rng(26, trial);
        const IntervalUnion a = random_grid_union(rng);
        CHECK(gap(a).gap >= a.inf());
    }
}
