#include "gapset/bounds.hpp"
#include "gapset/constructions.hpp"
#include "gapset/discrete.hpp"
#include "gapset/search.hpp"
#include "gapset/semigroup.hpp"
#include "gapset/set_io.hpp"
#include "gapset/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace gapset;

std::vector<std::int64_t> parse_elements(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

int cmd_discrete_check(const std::string& theorem, std::int64_t trials, std::uint64_t seed) {
    std::int64_t checked = 0, failed = 0;

    auto note = [&](bool ok) {
        ++checked;
        if (!ok) ++failed;
    };

    if (theorem == "3n3" || theorem == "lev" || theorem == "lint" || theorem == "chA") {
        for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
            std::vector<std::int64_t> elems{0};
            for (int b = 0; b < 12; ++b)
                if (mask & (1u << b)) elems.push_back(b + 1);
            if (elems.size() > 7) continue;
            const IntSet a(std::move(elems));
            if (a.size() < 2 || a.gcd() != 1) continue;
            if (theorem == "3n3") note(check_3n3(a));
            if (a.size() < 3) continue;
            const std::int64_t n = static_cast<std::int64_t>(a.size());
            const std::int64_t kappa = (a.max() - 1) / (n - 2);
            if (theorem == "lev")
                for (std::int64_t h = 1; h <= 6; ++h) note(check_lev_hA(a, h));
            if (theorem == "lint")
                for (std::int64_t h = 2 * kappa; h <= 2 * kappa + 2; ++h)
                    note(check_lint_block(a, h));
            if (theorem == "chA" && a.max() <= 2 * n - 4)
                for (std::int64_t h = 1; h <= 6; ++h) note(check_corollary_hA(a, h));
        }
    } else if (theorem == "cd" || theorem == "cdcor") {
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
                    note(theorem == "cd" ? check_cd(u, v) : check_cd_corollary({u, v}));
        }
    } else if (theorem == "freiman") {
        for (std::int64_t i = 0; i < trials; ++i) {
            TrialRng rng(seed, static_cast<std::uint64_t>(i));
            const int n = 1 + static_cast<int>(rng.below(50));
            std::vector<Rational> pts;
            for (int j = 0; j < n; ++j) pts.push_back(Rational(rng.range(0, 63), 64));
            const HalfArcResult r = freiman_half_arc(pts);
            note(static_cast<double>(r.count) >= (n + r.abs_sum) / 2.0 - 1e-9);
        }
    } else if (theorem == "frobenius") {
        for (std::int64_t a1 = 1; a1 <= 8; ++a1)
            for (std::int64_t a2 = a1; a2 <= 40; ++a2)
                for (std::int64_t a3 = a2; a3 <= 40; ++a3) {
                    const IntSet a(a2 == a3 ? std::vector<std::int64_t>{a1, a2}
                                            : std::vector<std::int64_t>{a1, a2, a3});
                    if (a.gcd() != 1) continue;
                    note(frobenius_number(a) == frobenius_residue_table(a));
                }
    } else {
        std::cerr << "unknown theorem: " << theorem << "\n";
        return 2;
    }

    nlohmann::json out{{"theorem", theorem}, {"checked", checked}, {"failed", failed}};
    std::cout << out.dump(2) << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact gap values G(A) for finite unions of open rational intervals"};
    app.require_subcommand(1);

    int workers = 0;
    std::int64_t max_grid_cells = 10'000'000;
    app.add_option("--workers", workers, "worker threads (0 = all available)");
    app.add_option("--max-grid-cells", max_grid_cells, "refuse inputs whose grid exceeds this");

    // gap
    auto* gap_cmd = app.add_subcommand("gap", "exact gap value of a set file");
    std::string gap_set;
    gap_cmd->add_option("--set", gap_set, "set file (JSON)")->required();

    // sumset
    auto* sum_cmd = app.add_subcommand("sumset", "Minkowski sums of set files");
    std::string sum_set, sum_with;
    std::int64_t sum_fold = 0;
    sum_cmd->add_option("--set", sum_set, "set file (JSON)")->required();
    sum_cmd->add_option("--with", sum_with, "second set file; result is the pairwise sumset");
    sum_cmd->add_option("--fold", sum_fold, "h-fold sumset of --set");

    // construct
    auto* con_cmd = app.add_subcommand("construct", "emit an extremal construction");
    std::string con_family, con_alpha, con_out;
    con_cmd->add_option("--family", con_family, "ex1 | ex2 | ex3")->required();
    con_cmd->add_option("--alpha", con_alpha, "target measure, e.g. 5/12")->required();
    con_cmd->add_option("--out", con_out, "also write the set file here");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "run falsification suites");
    std::vector<std::string> ver_suites;
    std::int64_t ver_trials = 1000;
    std::uint64_t ver_seed = 7;
    ver_cmd->add_option("--suite", ver_suites,
                        "suite name (repeatable); default: all theorem suites");
    ver_cmd->add_option("--trials", ver_trials, "trials per randomized suite");
    ver_cmd->add_option("--seed", ver_seed, "master seed");

    // discrete
    auto* dis_cmd = app.add_subcommand("discrete", "integer-side oracles and checks");
    dis_cmd->require_subcommand(1);
    auto* frob_cmd = dis_cmd->add_subcommand("frobenius", "Frobenius number of a coprime set");
    std::string frob_elems;
    frob_cmd->add_option("--elements", frob_elems, "comma-separated positive integers")->required();
    auto* hf_cmd = dis_cmd->add_subcommand("hfold", "h-fold integer sumset");
    std::string hf_elems;
    std::int64_t hf_h = 2;
    hf_cmd->set_help_flag("--help", "print this help message and exit");  // frees -h/--h
    hf_cmd->add_option("--elements", hf_elems, "comma-separated integers")->required();
    hf_cmd->add_option("-h,--h", hf_h, "fold count");
    auto* chk_cmd = dis_cmd->add_subcommand("check", "exhaustive theorem checks");
    std::string chk_theorem;
    std::int64_t chk_trials = 200;
    std::uint64_t chk_seed = 7;
    chk_cmd->add_option("--theorem", chk_theorem,
                        "3n3 | lev | lint | chA | cd | cdcor | freiman | frobenius")
        ->required();
    chk_cmd->add_option("--trials", chk_trials, "trials (randomized theorems only)");
    chk_cmd->add_option("--seed", chk_seed, "seed (randomized theorems only)");

    // search
    auto* sea_cmd = app.add_subcommand("search", "search for high-ratio sets at fixed measure");
    std::string sea_family = "random-grid", sea_alpha;
    std::int64_t sea_budget = 100, sea_grid = 48, sea_keep = 10;
    std::uint64_t sea_seed = 42;
    sea_cmd->add_option("--family", sea_family, "scaled-chain | punctured | random-grid");
    sea_cmd->add_option("--alpha", sea_alpha, "target measure, e.g. 1/5")->required();
    sea_cmd->add_option("--budget", sea_budget, "trial count");
    sea_cmd->add_option("--seed", sea_seed, "seed");
    sea_cmd->add_option("--grid", sea_grid, "grid denominator for candidate endpoints");
    sea_cmd->add_option("--keep", sea_keep, "records to emit");

    // the global --workers / --max-grid-cells flags may follow the subcommand
    for (auto* sc : {gap_cmd, sum_cmd, con_cmd, ver_cmd, dis_cmd, sea_cmd}) sc->fallthrough();
    for (auto* sc : {frob_cmd, hf_cmd, chk_cmd}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    SemigroupOptions engine;
    engine.max_grid_cells = max_grid_cells;

    try {
        if (*gap_cmd) {
            const IntervalUnion a = load_set_file(gap_set);
            std::cout << gap_result_to_json(gap(a, engine)).dump(2) << "\n";
            return 0;
        }
        if (*sum_cmd) {
            const IntervalUnion a = load_set_file(sum_set);
            IntervalUnion result;
            if (!sum_with.empty())
                result = minkowski_sum(a, load_set_file(sum_with));
            else if (sum_fold >= 1)
                result = h_fold(a, sum_fold);
            else {
                std::cerr << "sumset needs --with or --fold\n";
                return 2;
            }
            std::cout << set_to_json(result).dump(2) << "\n";
            return 0;
        }
        if (*con_cmd) {
            const Rational alpha = parse_rational(con_alpha);
            ConstructionReport r;
            if (con_family == "ex1")
                r = example1(alpha);
            else if (con_family == "ex2")
                r = example2(alpha);
            else if (con_family == "ex3")
                r = example3(alpha);
            else {
                std::cerr << "unknown family: " << con_family << "\n";
                return 2;
            }
            if (!con_out.empty()) {
                std::ofstream out(con_out);
                out << set_to_json(r.set).dump(2) << "\n";
            }
            std::cout << construction_to_json(r).dump(2) << "\n";
            return 0;
        }
        if (*ver_cmd) {
            VerifyConfig cfg;
            cfg.seed = ver_seed;
            cfg.trials = ver_trials;
            cfg.workers = workers;
            cfg.engine = engine;
            std::vector<std::string> names = ver_suites;
            if (names.empty())
                names = {"main-bound", "strengthened", "clint", "macbeath",
                         "mesSj",      "boxing",       "discrete"};
            const nlohmann::json report = run_suites(names, cfg);
            std::cout << report.dump(2) << "\n";
            return report["ok"].get<bool>() ? 0 : 1;
        }
        if (*dis_cmd) {
            if (*frob_cmd) {
                const IntSet a(parse_elements(frob_elems));
                nlohmann::json out{{"elements", frob_elems},
                                   {"frobenius", frobenius_number(a)},
                                   {"residue_table", frobenius_residue_table(a)}};
                std::cout << out.dump(2) << "\n";
                return 0;
            }
            if (*hf_cmd) {
                const IntSet a(parse_elements(hf_elems));
                const IntSet fold = int_hfold(a, hf_h);
                nlohmann::json out = nlohmann::json::array();
                for (auto e : fold.elements()) out.push_back(e);
                std::cout << nlohmann::json{{"h", hf_h}, {"sumset", out}}.dump(2) << "\n";
                return 0;
            }
            if (*chk_cmd) return cmd_discrete_check(chk_theorem, chk_trials, chk_seed);
        }
        if (*sea_cmd) {
            SearchConfig cfg;
            cfg.alpha = parse_rational(sea_alpha);
            cfg.family = parse_family(sea_family);
            cfg.budget = sea_budget;
            cfg.seed = sea_seed;
            cfg.grid_denominator = sea_grid;
            cfg.keep = sea_keep;
            cfg.workers = workers;
            cfg.engine = engine;
            const SearchResult res = run_search(cfg);
            for (const auto& rec : res.records) std::cout << rec.to_json().dump() << "\n";
            std::cerr << "evaluated=" << res.evaluated << " discarded=" << res.discarded << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
