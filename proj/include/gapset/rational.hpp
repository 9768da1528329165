#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gapset {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest integer n with n <= r.
inline Integer floor_int(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Integer ceil_int(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (r > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

/// Fractional part {r} = r - floor(r), always in [0,1).
inline Rational frac_part(const Rational& r) {
    return r - Rational(floor_int(r));
}

/// Parses "p/q" or "p" (optional leading '-'). Throws on malformed input
/// or zero denominator.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal \"" + s + "\"");
    }
}

/// "p/q" for non-integers, plain "p" otherwise. Inverse of parse_rational.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace gapset
