#pragma once

#include "gapset/interval.hpp"
#include "gapset/rng.hpp"
#include "gapset/semigroup.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gapset {

struct VerifyConfig {
    std::uint64_t seed = 7;
    std::int64_t trials = 1000;
    int workers = 0;  // 0 = runtime default
    SemigroupOptions engine;
};

struct SuiteReport {
    std::string name;
    bool theorem = true;  // conjecture probes report violations without failing
    std::int64_t trials = 0;
    std::int64_t passes = 0;
    std::int64_t failures = 0;
    std::vector<nlohmann::json> counterexamples;  // first few, by trial index

    bool ok() const { return !theorem || failures == 0; }
    nlohmann::json to_json() const;
};

/// Suite names accepted by run_suite / the verify CLI subcommand.
/// Theorem suites: main-bound, strengthened, clint, macbeath, mesSj,
/// boxing, discrete. The conjecture suite probes the open question of
/// extending the sparse-case formula to alpha in (0.1, 1/3]; violations
/// there are findings, not failures.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

nlohmann::json run_suites(const std::vector<std::string>& names, const VerifyConfig& cfg);

// Seeded corpus generators, shared by the verify suites and the tests.

/// 1..max_parts disjoint open intervals on a denominator-q grid with
/// q in {12, 24, 48}; abutting holes appear with small probability.
IntervalUnion random_grid_union(TrialRng& rng, int max_parts = 6);

/// Same corpus conditioned on sup = 1.
IntervalUnion random_unit_sup_union(TrialRng& rng, int max_parts = 6);

/// Same corpus conditioned on mes <= 1/2 (retries the draw).
IntervalUnion random_half_measure_union(TrialRng& rng, int max_parts = 6);

/// Random wrapped open torus subset (a shifted grid union, projected).
TorusUnion random_torus_union(TrialRng& rng, int max_parts = 3);

}  // namespace gapset
