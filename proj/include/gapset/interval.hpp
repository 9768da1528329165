#pragma once

#include "gapset/rational.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace gapset {

/// Open interval (lo, hi) with rational endpoints; never empty.
struct OpenInterval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo < x && x < hi; }
    bool operator==(const OpenInterval&) const = default;
};

/// Canonical finite union of disjoint open intervals.
///
/// Parts are sorted by lo and pairwise disjoint. Abutting parts
/// (P.hi == Q.lo) are kept separate: the shared endpoint is a genuine
/// hole of the point set, which is what makes punctured sets such as
/// (1-a,1)\{2(1-a)} representable. Two unions describing the same point
/// set always have identical part lists.
class IntervalUnion {
public:
    IntervalUnion() = default;

    /// Canonicalizes an arbitrary list: overlapping intervals are merged,
    /// abutting ones stay separate unless some third input covers the
    /// shared point. Inputs with lo >= hi are rejected.
    static IntervalUnion normalized(std::vector<OpenInterval> intervals);

    const std::vector<OpenInterval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t part_count() const { return parts_.size(); }

    Rational measure() const;
    bool contains(const Rational& x) const;

    /// inf / sup of the point set; undefined on the empty union (throws).
    Rational inf() const;
    Rational sup() const;

    bool operator==(const IntervalUnion&) const = default;

private:
    std::vector<OpenInterval> parts_;
};

/// Lexicographic order on part lists; a total order used only for
/// deterministic tie-breaking in reports.
bool lex_less(const IntervalUnion& a, const IntervalUnion& b);

/// Exact pointwise sumset {u+v}. Throws if either operand is empty.
IntervalUnion minkowski_sum(const IntervalUnion& u, const IntervalUnion& v);

/// {c*u : u in U} for c > 0.
IntervalUnion scale(const IntervalUnion& u, const Rational& c);

/// {u + c : u in U}.
IntervalUnion translate(const IntervalUnion& u, const Rational& c);

/// U restricted to the open interval (a, b).
IntervalUnion intersect_open(const IntervalUnion& u, const Rational& a, const Rational& b);

/// True iff every point of `inner` lies in `outer`. Since both are
/// canonical, each part of `inner` must sit inside a single part of
/// `outer` (a part cannot straddle a hole).
bool is_subset(const IntervalUnion& inner, const IntervalUnion& outer);

/// Closed interval [lo, hi]; lo == hi encodes an isolated point.
struct ClosedPiece {
    Rational lo;
    Rational hi;
    bool operator==(const ClosedPiece&) const = default;
};

/// Maximal closed pieces of the complement of an open union within a
/// closed interval. Sorted and pairwise non-adjacent.
struct ClosedRemnant {
    std::vector<ClosedPiece> pieces;

    bool empty() const { return pieces.empty(); }
    Rational measure() const;
    bool contains(const Rational& x) const;
    bool operator==(const ClosedRemnant&) const = default;
};

/// [a,b] \ U as maximal closed pieces, including isolated points where
/// two open parts abut. Requires a < b.
ClosedRemnant complement_within(const IntervalUnion& u, const Rational& a, const Rational& b);

/// Open subset of the torus R/Z. `parts` holds line intervals inside
/// [0,1]; the torus point 0 == 1 belongs to the set iff covers_zero is
/// set (some lifted part covered an integer).
struct TorusUnion {
    IntervalUnion parts;
    bool covers_zero = false;

    Rational measure() const { return parts.measure(); }
    bool empty() const { return parts.empty() && !covers_zero; }
    bool operator==(const TorusUnion&) const = default;
};

/// Canonical image of a line union in R/Z.
TorusUnion torus_project(const IntervalUnion& u);

/// Exact mod-1 sumset. Throws if either operand is empty.
TorusUnion torus_sum(const TorusUnion& u, const TorusUnion& v);

}  // namespace gapset
