#include "gapset/discrete.hpp"
#include "gapset/rng.hpp"
#include "gapset/semigroup.hpp"
#include "gapset/verify.hpp"

#include <doctest.h>

using namespace gapset;

namespace {

IntSet make(std::initializer_list<std::int64_t> xs) { return IntSet(std::vector<std::int64_t>(xs)); }

}  // namespace

TEST_CASE("frobenius_number") {
    CHECK(frobenius_number(make({3, 5})) == 7);
    CHECK(frobenius_number(make({2, 3})) == 1);
    CHECK(frobenius_number(make({1})) == 0);
    CHECK(frobenius_number(make({6, 9, 20})) == 43);
    CHECK_THROWS_AS(frobenius_number(make({2, 4})), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_number(make({0, 3})), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_number(IntSet{}), std::invalid_argument);
}

TEST_CASE("frobenius residue-table agrees with the sieve") {
    CHECK(frobenius_residue_table(make({3, 5})) == 7);
    CHECK(frobenius_residue_table(make({2, 3})) == 1);
    CHECK(frobenius_residue_table(make({6, 9, 20})) == 43);
    for (std::int64_t a = 2; a <= 8; ++a)
        for (std::int64_t b = a + 1; b <= 30; ++b) {
            const IntSet s = make({a, b});
            if (s.gcd() != 1) continue;
            CHECK(frobenius_number(s) == frobenius_residue_table(s));
            CHECK(frobenius_number(s) == a * b - a - b);  // classical two-element value
        }
}

TEST_CASE("int_hfold") {
    CHECK(int_hfold(make({0, 1, 3}), 2) == make({0, 1, 2, 3, 4, 6}));
    CHECK(int_hfold(make({0, 1}), 5) == make({0, 1, 2, 3, 4, 5}));
    CHECK(int_hfold(make({0, 2, 3}), 2) == make({0, 2, 3, 4, 5, 6}));
    CHECK_THROWS_AS(int_hfold(make({0, 1}), 0), std::invalid_argument);
}

TEST_CASE("property: int_hfold recursion") {
    for (int trial = 0; trial < 50; ++trial) {
        TrialRng rng(41, trial);
        std::vector<std::int64_t> elems{0};
        const int n = 1 + static_cast<int>(rng.below(5));
        for (int i = 0; i < n; ++i) elems.push_back(rng.range(1, 15));
        const IntSet a(std::move(elems));
        for (std::int64_t h = 1; h <= 4; ++h) {
            IntSet lhs = int_hfold(a, h + 1);
            const IntSet prev = int_hfold(a, h);
            std::vector<std::int64_t> sums;
            for (auto x : prev.elements())
                for (auto e : a.elements()) sums.push_back(x + e);
            CHECK(lhs == IntSet(std::move(sums)));
        }
    }
}

TEST_CASE("check_3n3") {
    CHECK(check_3n3(make({0, 1, 3})));
    CHECK(check_3n3(make({0, 1})));
    CHECK_THROWS_AS(check_3n3(make({1, 3})), std::invalid_argument);
    CHECK_THROWS_AS(check_3n3(make({0, 2, 4})), std::invalid_argument);
}

TEST_CASE("check_lev_hA") {
    CHECK(check_lev_hA(make({0, 1, 3}), 2));
    CHECK(check_lev_hA(make({0, 1, 2}), 4));
    CHECK_THROWS_AS(check_lev_hA(make({0, 1}), 2), std::invalid_argument);
}

TEST_CASE("check_lint_block") {
    CHECK(check_lint_block(make({0, 1, 3}), 4));
    CHECK_THROWS_AS(check_lint_block(make({0, 1}), 4), std::invalid_argument);
    CHECK_THROWS_AS(check_lint_block(make({0, 1, 3}), 3), std::invalid_argument);
}

TEST_CASE("check_corollary_hA") {
    CHECK(check_corollary_hA(make({0, 1, 2}), 3));
    CHECK(check_corollary_hA(make({0, 1, 2, 3, 4}), 2));
    CHECK_THROWS_AS(check_corollary_hA(make({0, 1, 5}), 2), std::invalid_argument);
}

TEST_CASE("mod sets and Cauchy-Davenport") {
    const ModSet u(5, {0, 1});
    CHECK(mod_sum(u, u).size() == 3);
    CHECK(check_cd(u, u));
    CHECK_THROWS_AS(ModSet(6, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(mod_sum(u, ModSet(7, {0})), std::invalid_argument);

    // exhaustive at p = 7
    std::vector<ModSet> subsets;
    for (std::uint32_t mask = 1; mask < (1u << 7); ++mask) {
        std::vector<std::int64_t> elems;
        for (std::int64_t b = 0; b < 7; ++b)
            if (mask & (1u << b)) elems.push_back(b);
        subsets.emplace_back(7, std::move(elems));
    }
    for (const auto& a : subsets)
        for (const auto& b : subsets) CHECK(check_cd(a, b));
}

TEST_CASE("check_cd_corollary") {
    // three sets of size 2 at p = 5 whose sum misses something: 6 <= 5+3-2
    const ModSet a(5, {0, 1});
    CHECK(check_cd_corollary({a, a, a}));
    CHECK(!mod_hfold(a, 3).is_full());
    CHECK_THROWS_AS(check_cd_corollary({}), std::invalid_argument);
}

TEST_CASE("freiman_half_arc") {
    {
        const auto r = freiman_half_arc({Rational(0), Rational(1, 2)});
        CHECK(r.count == 1);
        CHECK(r.abs_sum < 1e-9);
    }
    {
        const auto r = freiman_half_arc({Rational(0), Rational(0), Rational(0)});
        CHECK(r.count == 3);
        CHECK(r.abs_sum == doctest::Approx(3.0));
    }
    CHECK_THROWS_AS(freiman_half_arc({}), std::invalid_argument);

    for (int trial = 0; trial < 50; ++trial) {
        TrialRng rng(42, trial);
        const int n = 1 + static_cast<int>(rng.below(40));
        std::vector<Rational> pts;
        for (int j = 0; j < n; ++j) pts.push_back(Rational(rng.range(0, 63), 64));
        const auto r = freiman_half_arc(pts);
        CHECK(static_cast<double>(r.count) >= (n + r.abs_sum) / 2.0 - 1e-9);

        // the scanned maximum matches an exhaustive fine-grid scan
        std::int64_t best = 0;
        for (std::int64_t g = 0; g < 128; ++g) {
            const Rational beta(g, 128);
            std::int64_t c = 0;
            for (const auto& z : pts)
                if (frac_part(z - beta) < Rational(1, 2)) ++c;
            best = std::max(best, c);
        }
        CHECK(r.count >= best);
    }
}

TEST_CASE("probe_kp_conclusion") {
    CHECK(probe_kp_conclusion(ModSet(11, {0, 1}), 8) == ProbeResult::contained);

    std::vector<std::int64_t> all;
    for (std::int64_t i = 0; i < 11; ++i) all.push_back(i);
    CHECK_THROWS_AS(probe_kp_conclusion(ModSet(11, all), 8), std::invalid_argument);
    CHECK_THROWS_AS(probe_kp_conclusion(ModSet(11, {0, 1}), 7), std::invalid_argument);
}

TEST_CASE("property: discretization bridges to the continuous engine") {
    for (int trial = 0; trial < 30; ++trial) {
        TrialRng rng(43, trial);
        const IntervalUnion a = random_grid_union(rng, 4);
        const std::int64_t q = 48;
        std::vector<std::int64_t> cells;
        for (std::int64_t z = 0; z < q; ++z) {
            // [z/q, (z+1)/q) inside the open set: interior plus left endpoint
            bool inside = a.contains(Rational(2 * z + 1, 2 * q)) && a.contains(Rational(z, q));
            for (const auto& p : a.parts())
                if (p.lo <= Rational(z, q) && Rational(z + 1, q) <= p.hi &&
                    p.contains(Rational(2 * z + 1, 2 * q)) && p.lo < Rational(z, q))
                    inside = true;
            if (inside) cells.push_back(z);
        }
        if (cells.empty()) continue;
        const IntSet aq(std::move(cells));
        for (std::int64_t h = 1; h <= 4; ++h) {
            const IntervalUnion fold = h_fold(a, h);
            const IntSet aq_fold = int_hfold(aq, h);
            for (auto z : aq_fold.elements()) {
                // the half-open cell [z/q, (z+1)/q) must sit in one part
                bool covered = false;
                for (const auto& p : fold.parts())
                    if (p.lo < Rational(z, q) && Rational(z + 1, q) <= p.hi) covered = true;
                CHECK(covered);
            }
        }
    }
}
