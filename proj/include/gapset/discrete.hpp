#pragma once

#include "gapset/rational.hpp"

#include <cstdint>
#include <vector>

namespace gapset {

/// Finite set of integers, sorted and duplicate-free.
class IntSet {
public:
    IntSet() = default;
    explicit IntSet(std::vector<std::int64_t> elements);

    const std::vector<std::int64_t>& elements() const { return elems_; }
    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    std::int64_t min() const;
    std::int64_t max() const;
    std::int64_t gcd() const;  // gcd of absolute values, 0 for empty set
    bool contains(std::int64_t x) const;

    bool operator==(const IntSet&) const = default;

private:
    std::vector<std::int64_t> elems_;
};

/// Largest positive integer not expressible as a sum of elements of A
/// (repetition allowed, at least one summand); 0 if every positive
/// integer is representable. Sieve up to (min A)*(max A), which covers
/// the classical two-element bound ab-a-b for any coprime pair in A.
/// Requires all elements >= 1 and gcd(A) = 1.
std::int64_t frobenius_number(const IntSet& a);

/// Same value via the residue-table method: shortest representable value
/// in each residue class mod min(A). Independent of the sieve; used to
/// cross-validate it.
std::int64_t frobenius_residue_table(const IntSet& a);

/// Exact h-fold sumset. Requires A non-empty, h >= 1.
IntSet int_hfold(const IntSet& a, std::int64_t h);

/// |2A| >= min(max A, 2|A|-3) + |A|. Requires min = 0, gcd = 1, |A| >= 2.
bool check_3n3(const IntSet& a);

/// Two-case lower bound on |hA| with kappa = floor((l-1)/(n-2)):
///   h <= kappa: h(h+1)/2*(n-2) + h + 1
///   h >= kappa: kappa(kappa+1)/2*(n-2) + kappa + 1 + (h-kappa)*l.
/// Requires min = 0, gcd = 1, |A| >= 3.
bool check_lev_hA(const IntSet& a, std::int64_t h);

/// Block containment for h >= 2*kappa:
///   [c*kappa, h*l - c*kappa] ⊆ hA with c = 2l - (kappa+1)(n-2) - 2.
/// Vacuously true when the block is empty. Requires min = 0, gcd = 1,
/// |A| >= 3; h < 2*kappa is rejected.
bool check_lint_block(const IntSet& a, std::int64_t h);

/// |hA| >= n + (h-1)*l under l <= 2n-4. Requires min = 0, gcd = 1, n >= 3.
bool check_corollary_hA(const IntSet& a, std::int64_t h);

/// Subset of Z/pZ for a (trial-division verified) prime p.
class ModSet {
public:
    ModSet(std::int64_t p, std::vector<std::int64_t> elements);

    std::int64_t modulus() const { return p_; }
    const std::vector<std::int64_t>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool is_full() const { return elems_.size() == static_cast<std::size_t>(p_); }

    bool operator==(const ModSet&) const = default;

private:
    std::int64_t p_;
    std::vector<std::int64_t> elems_;
};

ModSet mod_sum(const ModSet& u, const ModSet& v);
ModSet mod_hfold(const ModSet& a, std::int64_t h);

/// Cauchy-Davenport: |U+V| >= min(|U|+|V|-1, p).
bool check_cd(const ModSet& u, const ModSet& v);

/// If A_1+...+A_h != Z/pZ then sum |A_i| <= p+h-2. Vacuously true when
/// the sum is everything. Requires a common modulus.
bool check_cd_corollary(const std::vector<ModSet>& sets);

struct HalfArcResult {
    Rational beta;
    std::int64_t count;   // points of the input in [beta, beta+1/2) mod 1
    double abs_sum;       // |sum exp(2 pi i z_j)|, floating point
};

/// Finds beta maximizing #{j : z_j in [beta, beta+1/2) mod 1}; the
/// maximizing beta lies in {z_j} ∪ {z_j + 1/2} since the count only
/// changes there. The guarantee count >= (n + |S|)/2 holds up to the
/// numeric slack of |S| (<= 1e-9 at desk scale).
HalfArcResult freiman_half_arc(const std::vector<Rational>& points);

enum class ProbeResult { contained, indeterminate };

/// Searches every difference d for an arithmetic progression of at most
/// (p-2n)/(k-2)+1 terms containing A. Requires k >= 8, |A| > p/(k+1),
/// and kA != Z/pZ. `indeterminate` at desk-scale primes is not a
/// counterexample (the underlying lemma only applies above an
/// unspecified p0).
ProbeResult probe_kp_conclusion(const ModSet& a, std::int64_t k);

}  // namespace gapset
