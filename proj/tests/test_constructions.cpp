#include "gapset/bounds.hpp"
#include "gapset/constructions.hpp"
#include "gapset/semigroup.hpp"

#include <doctest.h>

using namespace gapset;

namespace {
Rational q(const char* s) { return parse_rational(s); }
}

TEST_CASE("example1") {
    const auto r = example1(q("1/3"));
    CHECK(r.set.parts().front().lo == q("2/3"));
    CHECK(r.predicted_gap == 2);

    CHECK(example1(1).predicted_gap == 0);
    CHECK(example1(q("2/5")).predicted_gap == q("6/5"));
    CHECK_THROWS_AS(example1(0), std::invalid_argument);
    CHECK_THROWS_AS(example1(q("7/5")), std::invalid_argument);
}

TEST_CASE("example2") {
    const auto r = example2(q("3/4"));
    REQUIRE(r.set.part_count() == 2);
    CHECK(r.set.parts()[0].hi == q("1/2"));
    CHECK(r.set.parts()[1].lo == q("1/2"));
    CHECK(r.predicted_gap == q("1/2"));

    CHECK(example2(q("2/3")).predicted_gap == q("2/3"));
    CHECK_THROWS_AS(example2(q("1/2")), std::invalid_argument);
    CHECK_THROWS_AS(example2(1), std::invalid_argument);
}

TEST_CASE("example3 derived parameters") {
    const auto r = example3(q("5/12"));
    REQUIRE(r.params.has_value());
    CHECK(r.params->k == 4);
    CHECK(r.params->x == q("5/6"));
    CHECK(r.params->t == 1);
    CHECK(r.predicted_gap == q("5/4"));
    CHECK(r.predicted_gap > example1(q("5/12")).predicted_gap);  // 5/4 > 7/6

    const auto r2 = example3(q("11/24"));
    CHECK(r2.params->k == 10);
    CHECK(r2.params->x == q("11/12"));
    CHECK(r2.params->t == 1);
    CHECK(r2.predicted_gap == q("143/130"));

    CHECK_THROWS_AS(example3(q("1/3")), std::invalid_argument);
    CHECK_THROWS_AS(example3(q("1/2")), std::invalid_argument);
}

TEST_CASE("constructions hit their measure exactly") {
    for (int n = 1; n <= 24; ++n) {
        const Rational alpha(n, 25);
        CHECK(example1(alpha).set.measure() == alpha);
        if (alpha > q("1/2")) CHECK(example2(alpha).set.measure() == alpha);
        if (q("1/3") < alpha && alpha < q("1/2"))
            CHECK(example3(alpha).set.measure() == alpha);
    }
}

TEST_CASE("gap engine agrees with the closed forms") {
    for (const char* a : {"1/3", "1/7", "2/5", "3/10"}) {
        const auto r = example1(q(a));
        CHECK(gap(r.set).gap == r.predicted_gap);
    }
    for (const char* a : {"3/4", "2/3", "5/8", "9/10"}) {
        const auto r = example2(q(a));
        CHECK(gap(r.set).gap == r.predicted_gap);
    }
    for (const char* a : {"5/12", "11/24", "17/40", "19/48"}) {
        const auto r = example3(q(a));
        CHECK(gap(r.set).gap == r.predicted_gap);
    }
}

TEST_CASE("example3 beats the sparse formula but not the main bound") {
    for (int n = 17; n <= 23; ++n) {
        const Rational alpha(n, 48);
        const auto r = example3(alpha);
        CHECK(r.predicted_gap > example1(alpha).predicted_gap);
        CHECK(r.predicted_gap <= bound_main(alpha).value);
    }
}

TEST_CASE("all construction gaps respect the main bound") {
    for (int n = 1; n <= 19; ++n) {
        const Rational alpha(n, 20);
        CHECK(example1(alpha).predicted_gap <= bound_main(alpha).value);
        if (alpha > q("1/2"))
            CHECK(example2(alpha).predicted_gap <= bound_main(alpha).value);
    }
}
