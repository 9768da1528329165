#include "gapset/search.hpp"

#include "gapset/constructions.hpp"
#include "gapset/rng.hpp"
#include "gapset/set_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gapset {

SearchFamily parse_family(const std::string& name) {
    if (name == "scaled-chain") return SearchFamily::scaled_chain;
    if (name == "punctured") return SearchFamily::punctured;
    if (name == "random-grid") return SearchFamily::random_grid;
    throw std::invalid_argument("unknown search family: " + name);
}

const char* family_name(SearchFamily f) {
    switch (f) {
        case SearchFamily::scaled_chain: return "scaled-chain";
        case SearchFamily::punctured: return "punctured";
        case SearchFamily::random_grid: return "random-grid";
    }
    return "?";
}

nlohmann::json SearchRecord::to_json() const {
    return {{"set", set_to_json(set)},
            {"alpha", to_string(alpha)},
            {"gap", to_string(gap)},
            {"ratio", to_string(ratio)},
            {"family_params", family_params}};
}

namespace {

struct Candidate {
    IntervalUnion set;
    std::string params;
};

// Example-3-style chain with free (k, x); t is solved from the measure
// constraint so that mes = alpha exactly.
std::optional<Candidate> draw_chain(const SearchConfig& cfg, TrialRng& rng,
                                    std::uint64_t trial) {
    const Rational alpha = cfg.alpha;

    std::int64_t k;
    Rational x, t;
    if (trial == 0 && Rational(1, 3) < alpha && alpha < Rational(1, 2)) {
        // seed the family with the closed-form extremal parameters
        const ConstructionReport r = example3(alpha);
        k = r.params->k;
        x = r.params->x;
        t = r.params->t;
    } else {
        k = rng.range(2, 10);
        const std::int64_t g = cfg.grid_denominator * k;
        const std::int64_t j_lo = (k - 1) * cfg.grid_denominator + 1;  // x > 1 - 1/k
        if (j_lo > g - 1) return std::nullopt;
        const std::int64_t j = rng.range(j_lo, g - 1);
        x = Rational(j, g);
        const Rational den = x - (1 - x) * Rational(k - 1, 2);
        if (den <= 0) return std::nullopt;
        t = (1 - alpha) / den;
    }
    if (t <= 0 || t * x >= 1) return std::nullopt;

    std::vector<OpenInterval> parts;
    for (std::int64_t i = 1; i < k; ++i)
        parts.push_back({Rational(i) * t * x / k, Rational(i) * t / k});
    parts.push_back({t * x, Rational(1)});
    if (parts.front().lo <= 0) return std::nullopt;

    Candidate c;
    c.set = IntervalUnion::normalized(std::move(parts));
    if (c.set.measure() != alpha) return std::nullopt;
    c.params = "k=" + std::to_string(k) + " x=" + to_string(x) + " t=" + to_string(t);
    return c;
}

// (1-alpha, 1) with 1..3 interior grid points removed; measure is
// unchanged by the punctures.
std::optional<Candidate> draw_punctured(const SearchConfig& cfg, TrialRng& rng) {
    const Rational lo = 1 - cfg.alpha;
    const std::int64_t g = cfg.grid_denominator;
    const std::int64_t j_lo = floor_int(lo * g).convert_to<std::int64_t>() + 1;
    if (j_lo > g - 1) return std::nullopt;  // no interior grid point

    const int holes = 1 + static_cast<int>(rng.below(3));
    std::vector<std::int64_t> pts;
    for (int i = 0; i < holes && static_cast<std::int64_t>(pts.size()) < g - j_lo; ++i) {
        const std::int64_t c = rng.range(j_lo, g - 1);
        if (Rational(c, g) > lo && std::find(pts.begin(), pts.end(), c) == pts.end())
            pts.push_back(c);
    }
    if (pts.empty()) return std::nullopt;
    std::sort(pts.begin(), pts.end());

    std::vector<OpenInterval> parts;
    Rational cur = lo;
    std::string desc = "holes=";
    for (auto c : pts) {
        const Rational p(c, g);
        parts.push_back({cur, p});
        cur = p;
        desc += to_string(p) + ",";
    }
    parts.push_back({cur, Rational(1)});
    desc.pop_back();

    return Candidate{IntervalUnion::normalized(std::move(parts)), desc};
}

// random grid union whose last part is stretched or shrunk to hit the
// target measure exactly
std::optional<Candidate> draw_random_grid(const SearchConfig& cfg, TrialRng& rng) {
    const std::int64_t g = cfg.grid_denominator;
    // 2m distinct endpoints must fit in [0, g]
    const auto max_parts = std::min<std::uint64_t>(5, static_cast<std::uint64_t>((g + 1) / 2));
    const int m = 1 + static_cast<int>(rng.below(max_parts));
    std::vector<std::int64_t> ends;
    while (static_cast<int>(ends.size()) < 2 * m) {
        const std::int64_t c = rng.range(0, g);
        if (std::find(ends.begin(), ends.end(), c) == ends.end()) ends.push_back(c);
    }
    std::sort(ends.begin(), ends.end());

    std::vector<OpenInterval> parts;
    for (int i = 0; i < m; ++i)
        parts.push_back({Rational(ends[2 * i], g), Rational(ends[2 * i + 1], g)});

    const Rational mes = [&] {
        Rational s = 0;
        for (const auto& p : parts) s += p.length();
        return s;
    }();
    Rational& last_hi = parts.back().hi;
    last_hi += cfg.alpha - mes;
    if (!(parts.back().lo < last_hi) || last_hi > 1) return std::nullopt;

    Candidate c;
    c.set = IntervalUnion::normalized(std::move(parts));
    if (c.set.measure() != cfg.alpha) return std::nullopt;
    return Candidate{std::move(c.set), "m=" + std::to_string(m)};
}

}  // namespace

SearchResult run_search(const SearchConfig& cfg) {
    if (cfg.alpha <= 0 || cfg.alpha >= 1)
        throw std::invalid_argument("search requires 0 < alpha < 1");
    if (cfg.budget < 1) throw std::invalid_argument("budget must be >= 1");
    if (cfg.grid_denominator < 2) throw std::invalid_argument("grid denominator must be >= 2");

    const Rational score_den = (1 - cfg.alpha) * Rational(floor_int(1 / cfg.alpha));
    std::vector<std::optional<SearchRecord>> slots(static_cast<std::size_t>(cfg.budget));

#ifdef _OPENMP
    const int threads = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
    for (std::int64_t i = 0; i < cfg.budget; ++i) {
        TrialRng rng(cfg.seed, static_cast<std::uint64_t>(i));
        std::optional<Candidate> cand;
        switch (cfg.family) {
            case SearchFamily::scaled_chain:
                cand = draw_chain(cfg, rng, static_cast<std::uint64_t>(i));
                break;
            case SearchFamily::punctured: cand = draw_punctured(cfg, rng); break;
            case SearchFamily::random_grid: cand = draw_random_grid(cfg, rng); break;
        }
        if (!cand) continue;
        SearchRecord rec;
        rec.set = std::move(cand->set);
        rec.alpha = cfg.alpha;
        rec.gap = gap(rec.set, cfg.engine).gap;
        rec.ratio = rec.gap / score_den;
        rec.family_params = std::move(cand->params);
        slots[static_cast<std::size_t>(i)] = std::move(rec);
    }

    SearchResult out;
    for (auto& s : slots) {
        if (s) {
            ++out.evaluated;
            out.records.push_back(std::move(*s));
        } else {
            ++out.discarded;
        }
    }
    std::stable_sort(out.records.begin(), out.records.end(),
                     [](const SearchRecord& a, const SearchRecord& b) {
                         if (a.ratio != b.ratio) return a.ratio > b.ratio;
                         return lex_less(a.set, b.set);
                     });
    if (static_cast<std::int64_t>(out.records.size()) > cfg.keep)
        out.records.resize(static_cast<std::size_t>(cfg.keep));
    return out;
}

}  // namespace gapset
