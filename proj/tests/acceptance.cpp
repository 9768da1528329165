// Acceptance suite: one line per criterion, exit code = number of failures.
// Usage: acceptance <path-to-gapset-cli>   (the CLI is only needed for #12)

#include "gapset/bounds.hpp"
#include "gapset/constructions.hpp"
#include "gapset/discrete.hpp"
#include "gapset/rng.hpp"
#include "gapset/semigroup.hpp"
#include "gapset/verify.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gapset;

namespace {

int g_failures = 0;

template <class Fn>
void criterion(int id, const std::string& label, double budget_seconds, Fn&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
        ok = false;
        note += " (over time budget)";
    }
    if (!ok) ++g_failures;
    std::printf("%s  criterion %2d: %s [%.1fs]%s\n", ok ? "PASS" : "FAIL", id, label.c_str(),
                secs, note.c_str());
    std::fflush(stdout);
}

std::string run_capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return "<popen failed>";
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    if (pclose(p) != 0) out += "<nonzero exit>";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "example1 attains (1-a)*floor(1/a)", 10, [] {
        std::vector<Rational> alphas{{1, 20}, {3, 40}};
        for (int k = 10; k <= 20; ++k) alphas.emplace_back(1, k);
        for (const auto& a : alphas) {
            const Rational want = (1 - a) * floor_int(1 / a);
            if (gap(example1(a).set).gap != want) return false;
        }
        return true;
    });

    criterion(2, "example2 attains 2(1-a)", 10, [] {
        for (int j = 33; j <= 52; ++j) {
            const Rational a(j, 64);
            if (gap(example2(a).set).gap != 2 * (1 - a)) return false;
        }
        return true;
    });

    criterion(3, "example3 beats the sparse formula", 30, [] {
        for (int j = 22; j <= 31; ++j) {
            const Rational a(j, 64);
            const auto r = example3(a);
            const Rational k(r.params->k);
            const Rational want = 2 * (1 + 2 / (k * (k + 3))) * (1 - a);
            const Rational sparse = (1 - a) * floor_int(1 / a);
            if (gap(r.set).gap != want || !(want > sparse)) return false;
        }
        return true;
    });

    criterion(4, "1000 random sets respect bound_main", 300, [] {
        for (int i = 0; i < 1000; ++i) {
            TrialRng rng(7, i);
            if (!check_main_bound(random_grid_union(rng))) return false;
        }
        return true;
    });

    criterion(5, "strengthened bound for a <= 1/2", 300, [] {
        for (int i = 0; i < 1000; ++i) {
            TrialRng rng(7, i);
            const IntervalUnion a = random_grid_union(rng);
            if (a.measure() > Rational(1, 2)) continue;
            if (gap(a).gap > bound_strengthened(a.measure())) return false;
        }
        return true;
    });

    criterion(6, "clint block contained in h-fold sums", 300, [] {
        for (int i = 0; i < 300; ++i) {
            TrialRng rng(8, i);
            const IntervalUnion a = random_grid_union(rng);
            const std::int64_t kappa = clint_kappa(a);
            IntervalUnion fold = a;
            for (std::int64_t h = 1; h <= 2 * kappa + 4; ++h) {
                if (h > 1) fold = minkowski_sum(fold, a);
                if (const auto pred = clint_predicted(a, h))
                    if (!is_subset(IntervalUnion::normalized({*pred}), fold)) return false;
            }
        }
        return true;
    });

    criterion(7, "Macbeath torus superadditivity", 60, [] {
        for (int i = 0; i < 1000; ++i) {
            TrialRng rng(9, i);
            const TorusUnion u = random_torus_union(rng);
            const TorusUnion v = random_torus_union(rng);
            if (!check_macbeath(u, v)) return false;
        }
        return true;
    });

    criterion(8, "mes S_j >= min(j*a, 1) for sup = 1 sets", 300, [] {
        for (int i = 0; i < 200; ++i) {
            TrialRng rng(10, i);
            const IntervalUnion a = random_unit_sup_union(rng);
            const Rational alpha = a.measure();
            const std::int64_t jmax = floor_int(1 / alpha).convert_to<std::int64_t>() + 2;
            for (std::int64_t j = 1; j <= jmax; ++j)
                if (sj_slice(a, j) < std::min(Rational(j) * alpha, Rational(1))) return false;
        }
        return true;
    });

    criterion(9, "discrete sumset bounds, exhaustive", 600, [] {
        // every A = {0} u B, B subset of [1,12], |A| <= 7, gcd(A) = 1
        for (std::uint32_t mask = 1; mask < (1u << 12); ++mask) {
            if (__builtin_popcount(mask) > 6) continue;
            std::vector<std::int64_t> elems{0};
            for (std::int64_t b = 0; b < 12; ++b)
                if (mask & (1u << b)) elems.push_back(b + 1);
            const IntSet a(std::move(elems));
            if (a.gcd() != 1) continue;
            if (!check_3n3(a)) return false;
            if (a.size() >= 3) {
                for (std::int64_t h = 1; h <= 6; ++h)
                    if (!check_lev_hA(a, h)) return false;
                const std::int64_t n = static_cast<std::int64_t>(a.size());
                const std::int64_t kappa = (a.max() - 1) / (n - 2);
                for (std::int64_t h = std::max<std::int64_t>(1, 2 * kappa); h <= 2 * kappa + 2; ++h)
                    if (!check_lint_block(a, h)) return false;
                if (a.max() <= 2 * n - 4)
                    for (std::int64_t h = 1; h <= 6; ++h)
                        if (!check_corollary_hA(a, h)) return false;
            }
        }
        for (std::int64_t p : {3, 5, 7}) {
            std::vector<ModSet> subsets;
            for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
                std::vector<std::int64_t> elems;
                for (std::int64_t b = 0; b < p; ++b)
                    if (mask & (1u << b)) elems.push_back(b);
                subsets.emplace_back(p, std::move(elems));
            }
            for (const auto& u : subsets)
                for (const auto& v : subsets)
                    if (!check_cd(u, v)) return false;
        }
        return true;
    });

    criterion(10, "Frobenius sieve vs residue table", 600, [] {
        if (frobenius_number(IntSet({3, 5})) != 7) return false;
        if (frobenius_number(IntSet({2, 3})) != 1) return false;
        std::vector<IntSet> sets;
        for (std::int64_t a = 1; a <= 8; ++a)
            for (std::int64_t b = a + 1; b <= 40; ++b) {
                sets.push_back(IntSet({a, b}));
                for (std::int64_t c = b + 1; c <= 40; ++c) sets.push_back(IntSet({a, b, c}));
            }
        for (const auto& s : sets) {
            if (s.gcd() != 1) continue;
            if (frobenius_number(s) != frobenius_residue_table(s)) return false;
        }
        return true;
    });

    criterion(11, "Freiman half-arc count bound", 60, [] {
        for (int i = 0; i < 200; ++i) {
            TrialRng rng(11, i);
            const int n = 1 + static_cast<int>(rng.below(40));
            std::vector<Rational> pts;
            for (int j = 0; j < n; ++j) pts.emplace_back(rng.range(0, 63), 64);
            const auto r = freiman_half_arc(pts);
            if (static_cast<double>(r.count) < (n + r.abs_sum) / 2.0 - 1e-9) return false;
        }
        return true;
    });

    criterion(12, "byte-identical verify/search output across workers", 300, [&cli] {
        if (cli.empty()) {
            std::cerr << "criterion 12 needs the CLI path as argv[1]\n";
            return false;
        }
        const std::string verify_tail =
            " verify --suite main-bound --suite mesSj --trials 120 --seed 7";
        const std::string v1 = run_capture(cli + verify_tail + " --workers 1");
        if (v1.empty() || v1.find("<") != std::string::npos) return false;
        if (run_capture(cli + verify_tail + " --workers 4") != v1) return false;
        if (run_capture(cli + verify_tail + " --workers 1") != v1) return false;

        const std::string search_tail =
            " search --family random-grid --alpha 5/12 --budget 40 --seed 42";
        const std::string s1 = run_capture(cli + search_tail + " --workers 1");
        if (s1.empty() || s1.find("<") != std::string::npos) return false;
        if (run_capture(cli + search_tail + " --workers 4") != s1) return false;
        if (run_capture(cli + search_tail + " --workers 1") != s1) return false;
        return true;
    });

    if (g_failures == 0)
        std::printf("all 12 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", g_failures);
    return g_failures;
}
