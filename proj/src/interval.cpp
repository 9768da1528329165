#include "gapset/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapset {

IntervalUnion IntervalUnion::normalized(std::vector<OpenInterval> intervals) {
    for (const auto& iv : intervals) {
        if (!(iv.lo < iv.hi))
            throw std::invalid_argument("interval with lo >= hi: (" + to_string(iv.lo) +
                                        ", " + to_string(iv.hi) + ")");
    }
    std::sort(intervals.begin(), intervals.end(), [](const OpenInterval& a, const OpenInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });

    IntervalUnion out;
    for (const auto& iv : intervals) {
        if (out.parts_.empty()) {
            out.parts_.push_back(iv);
            continue;
        }
        OpenInterval& cur = out.parts_.back();
        // Strict overlap merges; iv.lo == cur.hi abuts and the shared
        // point is uncovered (any earlier interval covering it would
        // have pushed cur.hi past it already).
        if (iv.lo < cur.hi) {
            if (iv.hi > cur.hi) cur.hi = iv.hi;
        } else {
            out.parts_.push_back(iv);
        }
    }
    return out;
}

Rational IntervalUnion::measure() const {
    Rational m = 0;
    for (const auto& p : parts_) m += p.length();
    return m;
}

bool IntervalUnion::contains(const Rational& x) const {
    // parts_ sorted by lo; binary search for the candidate part
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rational& v, const OpenInterval& p) { return v < p.lo; });
    if (it == parts_.begin()) return false;
    return std::prev(it)->contains(x);
}

Rational IntervalUnion::inf() const {
    if (parts_.empty()) throw std::invalid_argument("inf of empty union");
    return parts_.front().lo;
}

Rational IntervalUnion::sup() const {
    if (parts_.empty()) throw std::invalid_argument("sup of empty union");
    return parts_.back().hi;
}

bool lex_less(const IntervalUnion& a, const IntervalUnion& b) {
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
        if (pa[i].lo != pb[i].lo) return pa[i].lo < pb[i].lo;
        if (pa[i].hi != pb[i].hi) return pa[i].hi < pb[i].hi;
    }
    return pa.size() < pb.size();
}

IntervalUnion minkowski_sum(const IntervalUnion& u, const IntervalUnion& v) {
    if (u.empty() || v.empty())
        throw std::invalid_argument("minkowski_sum requires non-empty operands");
    std::vector<OpenInterval> sums;
    sums.reserve(u.part_count() * v.part_count());
    for (const auto& a : u.parts())
        for (const auto& b : v.parts())
            sums.push_back({a.lo + b.lo, a.hi + b.hi});
    return IntervalUnion::normalized(std::move(sums));
}

IntervalUnion scale(const IntervalUnion& u, const Rational& c) {
    if (c <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<OpenInterval> parts;
    parts.reserve(u.part_count());
    for (const auto& p : u.parts()) parts.push_back({p.lo * c, p.hi * c});
    return IntervalUnion::normalized(std::move(parts));
}

IntervalUnion translate(const IntervalUnion& u, const Rational& c) {
    std::vector<OpenInterval> parts;
    parts.reserve(u.part_count());
    for (const auto& p : u.parts()) parts.push_back({p.lo + c, p.hi + c});
    return IntervalUnion::normalized(std::move(parts));
}

IntervalUnion intersect_open(const IntervalUnion& u, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("intersect_open requires a < b");
    std::vector<OpenInterval> parts;
    for (const auto& p : u.parts()) {
        Rational lo = std::max(p.lo, a);
        Rational hi = std::min(p.hi, b);
        if (lo < hi) parts.push_back({lo, hi});
    }
    return IntervalUnion::normalized(std::move(parts));
}

bool is_subset(const IntervalUnion& inner, const IntervalUnion& outer) {
    std::size_t j = 0;
    const auto& out = outer.parts();
    for (const auto& p : inner.parts()) {
        while (j < out.size() && out[j].hi < p.hi) ++j;
        if (j == out.size() || !(out[j].lo <= p.lo && p.hi <= out[j].hi)) return false;
    }
    return true;
}

Rational ClosedRemnant::measure() const {
    Rational m = 0;
    for (const auto& p : pieces) m += p.hi - p.lo;
    return m;
}

bool ClosedRemnant::contains(const Rational& x) const {
    for (const auto& p : pieces)
        if (p.lo <= x && x <= p.hi) return true;
    return false;
}

ClosedRemnant complement_within(const IntervalUnion& u, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("complement_within requires a < b");

    bool a_interior = false;  // a strictly inside some part
    bool b_interior = false;
    std::vector<OpenInterval> clipped;
    for (const auto& p : u.parts()) {
        if (p.lo < a && a < p.hi) a_interior = true;
        if (p.lo < b && b < p.hi) b_interior = true;
        Rational lo = std::max(p.lo, a);
        Rational hi = std::min(p.hi, b);
        if (lo < hi) clipped.push_back({lo, hi});
    }

    ClosedRemnant out;
    Rational cur = a;
    for (const auto& p : clipped) {
        if (p.lo > cur) {
            out.pieces.push_back({cur, p.lo});
        } else if (p.lo == cur) {
            // cur == a: hole only if a is not interior to an unclipped part.
            // cur == previous part's hi: always a hole (canonical abutting).
            if (cur != a || !a_interior) out.pieces.push_back({cur, cur});
        }
        cur = p.hi;
    }
    if (cur < b) {
        out.pieces.push_back({cur, b});
    } else if (!b_interior) {
        out.pieces.push_back({b, b});
    }
    return out;
}

namespace {

// True iff (lo, hi) contains an integer in its interior.
bool spans_integer(const Rational& lo, const Rational& hi) {
    return Rational(floor_int(lo) + 1) < hi;
}

}  // namespace

TorusUnion torus_project(const IntervalUnion& u) {
    std::vector<OpenInterval> pieces;
    bool covers_zero = false;
    for (const auto& p : u.parts()) {
        if (spans_integer(p.lo, p.hi)) covers_zero = true;
        if (p.length() >= 1) {
            // covers every non-zero class; 0 itself only when an integer
            // lies strictly inside (e.g. (0,1) misses the class of 0)
            pieces.push_back({Rational(0), Rational(1)});
            continue;
        }
        const Rational shift(floor_int(p.lo));
        Rational lo = p.lo - shift;
        Rational hi = p.hi - shift;
        if (hi <= 1) {
            pieces.push_back({lo, hi});
        } else {
            pieces.push_back({lo, Rational(1)});
            pieces.push_back({Rational(0), hi - 1});
        }
    }
    return {IntervalUnion::normalized(std::move(pieces)), covers_zero};
}

TorusUnion torus_sum(const TorusUnion& u, const TorusUnion& v) {
    if (u.empty() || v.empty())
        throw std::invalid_argument("torus_sum requires non-empty operands");

    std::vector<OpenInterval> pieces;
    bool covers_zero = u.covers_zero && v.covers_zero;

    auto absorb = [&](const TorusUnion& t) {
        for (const auto& p : t.parts.parts()) pieces.push_back(p);
        covers_zero = covers_zero || t.covers_zero;
    };

    if (!u.parts.empty() && !v.parts.empty())
        absorb(torus_project(minkowski_sum(u.parts, v.parts)));
    // 0 + X = X for the isolated torus point 0
    if (u.covers_zero && !v.parts.empty()) absorb(v);
    if (v.covers_zero && !u.parts.empty()) absorb(u);

    return {IntervalUnion::normalized(std::move(pieces)), covers_zero};
}

}  // namespace gapset
