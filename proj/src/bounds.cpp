#include "gapset/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapset {

namespace {

Rational case_first(const Rational& a) { return (1 - a) * Rational(floor_int(1 / a)); }

Rational case_middle(const Rational& a) {
    return (1 - a + a * frac_part(1 / a)) * Rational(floor_int(1 / a));
}

Rational case_dense(const Rational& a) { return 2 * (1 - a); }

}  // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::sparse: return "sparse";
        case Regime::middle: return "middle";
        case Regime::dense: return "dense";
    }
    return "?";
}

BoundReport bound_main(const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) throw std::invalid_argument("bound_main requires 0 < alpha <= 1");
    const Rational tenth(1, 10);
    const Rational half(1, 2);

    BoundReport r;
    r.alpha = alpha;
    if (alpha < tenth) {
        r.regime = Regime::sparse;
        r.value = case_first(alpha);
    } else if (alpha == tenth) {
        r.regime = Regime::sparse;
        r.value = std::min(case_first(alpha), case_middle(alpha));
    } else if (alpha < half) {
        r.regime = Regime::middle;
        r.value = case_middle(alpha);
    } else if (alpha == half) {
        r.regime = Regime::middle;
        r.value = std::min(case_middle(alpha), case_dense(alpha));
    } else {
        r.regime = Regime::dense;
        r.value = case_dense(alpha);
    }
    return r;
}

Rational bound_strengthened(const Rational& alpha) {
    if (alpha <= 0 || alpha > Rational(1, 2))
        throw std::invalid_argument("bound_strengthened requires 0 < alpha <= 1/2");
    return case_middle(alpha);
}

std::int64_t clint_kappa(const IntervalUnion& a) {
    if (a.empty()) throw std::invalid_argument("clint_kappa of empty set");
    const Rational lambda = a.sup() - a.inf();
    return floor_int(lambda / a.measure()).convert_to<std::int64_t>();
}

std::optional<OpenInterval> clint_predicted(const IntervalUnion& a, std::int64_t h) {
    if (a.empty()) throw std::invalid_argument("clint_predicted of empty set");
    const Rational v = a.inf();
    const Rational w = a.sup();
    const Rational lambda = w - v;
    const Rational alpha = a.measure();
    const Rational kappa(floor_int(lambda / alpha));
    if (Rational(h) < 2 * kappa) return std::nullopt;

    const Rational margin = (2 * lambda - (kappa + 1) * alpha) * kappa;
    const Rational lo = v * h + margin;
    const Rational hi = w * h - margin;
    if (!(lo < hi)) return std::nullopt;
    return OpenInterval{lo, hi};
}

bool check_macbeath(const TorusUnion& u, const TorusUnion& v) {
    const TorusUnion s = torus_sum(u, v);
    return s.measure() >= std::min(u.measure() + v.measure(), Rational(1));
}

bool check_main_bound(const IntervalUnion& a, const SemigroupOptions& opts) {
    return gap(a, opts).gap <= bound_main(a.measure()).value;
}

}  // namespace gapset
