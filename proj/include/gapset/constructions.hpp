#pragma once

#include "gapset/interval.hpp"

#include <cstdint>
#include <optional>

namespace gapset {

/// An extremal set together with the closed-form gap its family predicts.
struct ConstructionReport {
    IntervalUnion set;
    Rational alpha;
    Rational predicted_gap;

    struct ChainParams {
        std::int64_t k;
        Rational x;
        Rational t;
    };
    std::optional<ChainParams> params;  // chain family only
};

/// A = (1-a, 1); predicted G = (1-a) * floor(1/a). Requires 0 < a <= 1.
ConstructionReport example1(const Rational& alpha);

/// A = (1-a, 1) \ {2(1-a)}; predicted G = 2(1-a). Requires 1/2 < a < 1;
/// at a = 1 the deleted point leaves (0,1) and the set degenerates to
/// the example1 family, so callers are redirected there.
ConstructionReport example2(const Rational& alpha);

/// The chain family for 1/3 < a < 1/2:
///   k = ceil(1/(1-2a)) - 2,  x = 1 - 1/(k+2),  t = 2(1 - 1/(k+3))(1-a),
///   A = (tx/k, t/k) ∪ (2tx/k, 2t/k) ∪ ... ∪ (tx, 1),
/// predicted G = 2(1 + 2/(k(k+3)))(1-a), strictly above (1-a)*floor(1/a).
ConstructionReport example3(const Rational& alpha);

}  // namespace gapset
