#pragma once

#include "gapset/interval.hpp"
#include "gapset/semigroup.hpp"

#include <cstdint>
#include <optional>

namespace gapset {

enum class Regime { sparse, middle, dense };

struct BoundReport {
    Rational alpha;
    Regime regime;
    Rational value;
};

const char* regime_name(Regime r);

/// Piecewise upper bound for G(A) as a function of alpha = mes A:
///   (1-a)*floor(1/a)             for a <= 1/10,
///   (1-a+a*{1/a})*floor(1/a)     for 1/10 <= a <= 1/2,
///   2(1-a)                       for a >= 1/2.
/// At a boundary both adjacent formulas apply and the min is returned.
BoundReport bound_main(const Rational& alpha);

/// (1-a+a*{1/a})*floor(1/a), valid for every 0 < a <= 1/2.
Rational bound_strengthened(const Rational& alpha);

/// Predicted interior block of hA: with v = inf A, w = sup A,
/// lambda = w - v, kappa = floor(lambda/alpha), for h >= 2*kappa
///   (v*h + (2*lambda - (kappa+1)*alpha)*kappa,
///    w*h - (2*lambda - (kappa+1)*alpha)*kappa) ⊆ hA.
/// Returns nullopt below the h threshold or when the endpoints cross.
std::optional<OpenInterval> clint_predicted(const IntervalUnion& a, std::int64_t h);

/// kappa = floor((sup A - inf A) / mes A); the clint fold threshold is 2*kappa.
std::int64_t clint_kappa(const IntervalUnion& a);

/// mes(U+V) >= min(mes U + mes V, 1). False indicts the sumset engine.
bool check_macbeath(const TorusUnion& u, const TorusUnion& v);

/// gap(A) <= bound_main(mes A).
bool check_main_bound(const IntervalUnion& a, const SemigroupOptions& opts = {});

}  // namespace gapset
