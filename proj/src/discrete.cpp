#include "gapset/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gapset {

IntSet::IntSet(std::vector<std::int64_t> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

std::int64_t IntSet::min() const {
    if (elems_.empty()) throw std::invalid_argument("min of empty set");
    return elems_.front();
}

std::int64_t IntSet::max() const {
    if (elems_.empty()) throw std::invalid_argument("max of empty set");
    return elems_.back();
}

std::int64_t IntSet::gcd() const {
    std::int64_t g = 0;
    for (auto e : elems_) g = std::gcd(g, e);
    return g;
}

bool IntSet::contains(std::int64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

namespace {

void require_frobenius_input(const IntSet& a) {
    if (a.empty()) throw std::invalid_argument("frobenius: empty set");
    if (a.min() < 1) throw std::invalid_argument("frobenius: elements must be positive");
    if (a.gcd() != 1) throw std::invalid_argument("frobenius: gcd must be 1");
}

void require_normalized(const IntSet& a, std::size_t min_size) {
    if (a.size() < min_size)
        throw std::invalid_argument("set too small (need at least " +
                                    std::to_string(min_size) + " elements)");
    if (a.min() != 0) throw std::invalid_argument("min A must be 0");
    if (a.gcd() != 1) throw std::invalid_argument("gcd A must be 1");
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

std::int64_t frobenius_number(const IntSet& a) {
    require_frobenius_input(a);
    if (a.contains(1)) return 0;
    const std::int64_t limit = a.min() * a.max();
    std::vector<char> reach(static_cast<std::size_t>(limit) + 1, 0);
    reach[0] = 1;
    for (std::int64_t v = 1; v <= limit; ++v)
        for (auto e : a.elements()) {
            if (e > v) break;
            if (reach[v - e]) {
                reach[v] = 1;
                break;
            }
        }
    for (std::int64_t v = limit; v >= 1; --v)
        if (!reach[v]) return v;
    return 0;
}

std::int64_t frobenius_residue_table(const IntSet& a) {
    require_frobenius_input(a);
    const std::int64_t m = a.min();
    if (m == 1) return 0;
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 2;
    // dist[r] = least representable value congruent to r mod m
    std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kInf);
    dist[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::int64_t r = 0; r < m; ++r) {
            if (dist[r] == kInf) continue;
            for (auto e : a.elements()) {
                const std::int64_t cand = dist[r] + e;
                const std::int64_t cr = cand % m;
                if (cand < dist[cr]) {
                    dist[cr] = cand;
                    changed = true;
                }
            }
        }
    }
    std::int64_t worst = 0;
    for (std::int64_t r = 1; r < m; ++r) worst = std::max(worst, dist[r]);
    const std::int64_t f = worst - m;
    return f > 0 ? f : 0;
}

IntSet int_hfold(const IntSet& a, std::int64_t h) {
    if (a.empty()) throw std::invalid_argument("int_hfold of empty set");
    if (h < 1) throw std::invalid_argument("int_hfold requires h >= 1");
    std::vector<std::int64_t> acc = a.elements();
    for (std::int64_t i = 1; i < h; ++i) {
        std::vector<std::int64_t> next;
        next.reserve(acc.size() * a.size());
        for (auto x : acc)
            for (auto e : a.elements()) next.push_back(x + e);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        acc = std::move(next);
    }
    return IntSet(std::move(acc));
}

bool check_3n3(const IntSet& a) {
    require_normalized(a, 2);
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t l = a.max();
    return static_cast<std::int64_t>(int_hfold(a, 2).size()) >= std::min(l, 2 * n - 3) + n;
}

namespace {

std::int64_t lev_kappa(const IntSet& a) {
    return (a.max() - 1) / (static_cast<std::int64_t>(a.size()) - 2);
}

}  // namespace

bool check_lev_hA(const IntSet& a, std::int64_t h) {
    require_normalized(a, 3);
    if (h < 1) throw std::invalid_argument("h must be positive");
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t l = a.max();
    const std::int64_t kappa = lev_kappa(a);
    std::int64_t bound;
    if (h <= kappa)
        bound = h * (h + 1) / 2 * (n - 2) + h + 1;
    else
        bound = kappa * (kappa + 1) / 2 * (n - 2) + kappa + 1 + (h - kappa) * l;
    return static_cast<std::int64_t>(int_hfold(a, h).size()) >= bound;
}

bool check_lint_block(const IntSet& a, std::int64_t h) {
    require_normalized(a, 3);
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t l = a.max();
    const std::int64_t kappa = lev_kappa(a);
    if (h < 2 * kappa) throw std::invalid_argument("check_lint_block requires h >= 2*kappa");
    const std::int64_t c = 2 * l - (kappa + 1) * (n - 2) - 2;
    const std::int64_t lo = c * kappa;
    const std::int64_t hi = h * l - c * kappa;
    const IntSet ha = int_hfold(a, h);
    for (std::int64_t v = lo; v <= hi; ++v)
        if (!ha.contains(v)) return false;
    return true;
}

bool check_corollary_hA(const IntSet& a, std::int64_t h) {
    require_normalized(a, 3);
    if (h < 1) throw std::invalid_argument("h must be positive");
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t l = a.max();
    if (l > 2 * n - 4) throw std::invalid_argument("check_corollary_hA requires max A <= 2n-4");
    return static_cast<std::int64_t>(int_hfold(a, h).size()) >= n + (h - 1) * l;
}

ModSet::ModSet(std::int64_t p, std::vector<std::int64_t> elements) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    for (auto& e : elements) e = ((e % p) + p) % p;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    elems_ = std::move(elements);
}

ModSet mod_sum(const ModSet& u, const ModSet& v) {
    if (u.modulus() != v.modulus()) throw std::invalid_argument("modulus mismatch");
    if (u.empty() || v.empty()) throw std::invalid_argument("mod_sum of empty set");
    const std::int64_t p = u.modulus();
    std::vector<char> hit(static_cast<std::size_t>(p), 0);
    for (auto a : u.elements())
        for (auto b : v.elements()) hit[(a + b) % p] = 1;
    std::vector<std::int64_t> out;
    for (std::int64_t r = 0; r < p; ++r)
        if (hit[r]) out.push_back(r);
    return ModSet(p, std::move(out));
}

ModSet mod_hfold(const ModSet& a, std::int64_t h) {
    if (h < 1) throw std::invalid_argument("mod_hfold requires h >= 1");
    ModSet acc = a;
    for (std::int64_t i = 1; i < h; ++i) acc = mod_sum(acc, a);
    return acc;
}

bool check_cd(const ModSet& u, const ModSet& v) {
    const std::int64_t p = u.modulus();
    const auto total = static_cast<std::int64_t>(u.size() + v.size()) - 1;
    return static_cast<std::int64_t>(mod_sum(u, v).size()) >= std::min(total, p);
}

bool check_cd_corollary(const std::vector<ModSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("check_cd_corollary: no sets");
    const std::int64_t p = sets.front().modulus();
    ModSet acc = sets.front();
    std::int64_t total = static_cast<std::int64_t>(acc.size());
    for (std::size_t i = 1; i < sets.size(); ++i) {
        if (sets[i].modulus() != p) throw std::invalid_argument("modulus mismatch");
        acc = mod_sum(acc, sets[i]);
        total += static_cast<std::int64_t>(sets[i].size());
    }
    if (acc.is_full()) return true;
    return total <= p + static_cast<std::int64_t>(sets.size()) - 2;
}

HalfArcResult freiman_half_arc(const std::vector<Rational>& points) {
    if (points.empty()) throw std::invalid_argument("freiman_half_arc: empty input");

    std::vector<Rational> z;
    z.reserve(points.size());
    double re = 0, im = 0;
    for (const auto& p : points) {
        const Rational w = frac_part(p);
        z.push_back(w);
        const double t = 2.0 * std::numbers::pi * w.convert_to<double>();
        re += std::cos(t);
        im += std::sin(t);
    }
    const double abs_sum = std::hypot(re, im);

    const Rational half(1, 2);
    auto count_at = [&](const Rational& beta) {
        std::int64_t c = 0;
        for (const auto& w : z)
            if (frac_part(w - beta) < half) ++c;
        return c;
    };

    // candidate betas: the count function only changes at z_j and z_j + 1/2
    HalfArcResult best{z.front(), count_at(z.front()), abs_sum};
    for (const auto& w : z) {
        for (const Rational& beta : {w, frac_part(w + half)}) {
            const std::int64_t c = count_at(beta);
            if (c > best.count || (c == best.count && beta < best.beta)) {
                best.beta = beta;
                best.count = c;
            }
        }
    }
    return best;
}

ProbeResult probe_kp_conclusion(const ModSet& a, std::int64_t k) {
    if (k < 8) throw std::invalid_argument("probe_kp_conclusion requires k >= 8");
    const std::int64_t p = a.modulus();
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    if (!(Rational(n) > Rational(p, k + 1)))
        throw std::invalid_argument("probe_kp_conclusion requires |A| > p/(k+1)");
    if (mod_hfold(a, k).is_full())
        throw std::invalid_argument("probe_kp_conclusion requires kA != Z/pZ");

    auto pow_mod = [p](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };

    // terms <= (p-2n)/(k-2)+1, compared exactly as (terms-1)(k-2) <= p-2n
    for (std::int64_t d = 1; d <= (p - 1) / 2; ++d) {
        const std::int64_t inv = pow_mod(d, p - 2);
        std::vector<std::int64_t> b;
        b.reserve(a.size());
        for (auto e : a.elements()) b.push_back(e * inv % p);
        std::sort(b.begin(), b.end());
        std::int64_t max_gap = b.front() + p - b.back();
        for (std::size_t i = 1; i < b.size(); ++i)
            max_gap = std::max(max_gap, b[i] - b[i - 1]);
        const std::int64_t terms = p - max_gap + 1;
        if ((terms - 1) * (k - 2) <= p - 2 * n) return ProbeResult::contained;
    }
    return ProbeResult::indeterminate;
}

}  // namespace gapset
