#pragma once

#include "gapset/interval.hpp"
#include "gapset/semigroup.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gapset {

enum class SearchFamily { scaled_chain, punctured, random_grid };

SearchFamily parse_family(const std::string& name);
const char* family_name(SearchFamily f);

struct SearchConfig {
    Rational alpha;
    SearchFamily family = SearchFamily::random_grid;
    std::int64_t budget = 100;
    std::uint64_t seed = 42;
    std::int64_t grid_denominator = 48;
    std::int64_t keep = 10;  // records returned, best first
    int workers = 0;
    SemigroupOptions engine;
};

/// One evaluated candidate. ratio = gap / ((1-alpha) * floor(1/alpha)):
/// a ratio above 1 beats the conjectured extension of the sparse-case
/// formula and is worth independent re-verification from `set`.
struct SearchRecord {
    IntervalUnion set;
    Rational alpha;
    Rational gap;
    Rational ratio;
    std::string family_params;

    nlohmann::json to_json() const;
};

/// Deterministic given (seed, budget): same records in the same order
/// regardless of worker count. Candidates of measure exactly alpha are
/// drawn per family; infeasible draws are discarded and counted.
struct SearchResult {
    std::vector<SearchRecord> records;  // best first: ratio desc, set lex asc
    std::int64_t evaluated = 0;
    std::int64_t discarded = 0;
};

SearchResult run_search(const SearchConfig& cfg);

}  // namespace gapset
