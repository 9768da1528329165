#include "gapset/constructions.hpp"

#include <stdexcept>

namespace gapset {

ConstructionReport example1(const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) throw std::invalid_argument("example1 requires 0 < alpha <= 1");
    ConstructionReport r;
    r.alpha = alpha;
    r.set = IntervalUnion::normalized({{1 - alpha, Rational(1)}});
    r.predicted_gap = (1 - alpha) * Rational(floor_int(1 / alpha));
    return r;
}

ConstructionReport example2(const Rational& alpha) {
    if (alpha <= Rational(1, 2) || alpha >= 1)
        throw std::invalid_argument("example2 requires 1/2 < alpha < 1");
    ConstructionReport r;
    r.alpha = alpha;
    const Rational hole = 2 * (1 - alpha);
    r.set = IntervalUnion::normalized({{1 - alpha, hole}, {hole, Rational(1)}});
    r.predicted_gap = hole;
    return r;
}

ConstructionReport example3(const Rational& alpha) {
    if (alpha <= Rational(1, 3) || alpha >= Rational(1, 2))
        throw std::invalid_argument("example3 requires 1/3 < alpha < 1/2");

    const Integer k_int = ceil_int(1 / (1 - 2 * alpha)) - 2;
    const std::int64_t k = k_int.convert_to<std::int64_t>();
    const Rational x = 1 - Rational(1, k + 2);
    const Rational t = 2 * (1 - Rational(1, k + 3)) * (1 - alpha);

    std::vector<OpenInterval> parts;
    for (std::int64_t i = 1; i < k; ++i)
        parts.push_back({Rational(i) * t * x / k, Rational(i) * t / k});
    parts.push_back({t * x, Rational(1)});

    ConstructionReport r;
    r.alpha = alpha;
    r.set = IntervalUnion::normalized(std::move(parts));
    r.predicted_gap = 2 * (1 + Rational(2, k * (k + 3))) * (1 - alpha);
    r.params = ConstructionReport::ChainParams{k, x, t};

    // consistency of the derived parameters; a failure here is an engine
    // bug, not a caller error
    if (k < 2 || !(1 - Rational(1, k) < x) || !(x < 1 / t) || t < 1 ||
        r.set.measure() != alpha || r.set.part_count() != static_cast<std::size_t>(k))
        throw std::logic_error("example3 internal consistency check failed at alpha = " +
                               to_string(alpha));
    return r;
}

}  // namespace gapset
