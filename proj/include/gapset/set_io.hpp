#pragma once

#include "gapset/constructions.hpp"
#include "gapset/interval.hpp"
#include "gapset/semigroup.hpp"

#include <json.hpp>

#include <string>

namespace gapset {

/// Set-file schema: {"intervals": [["1/4","1/2"],["1/2","1"]]} with
/// rationals written as "p/q" or integer strings. Overlapping inputs are
/// normalized silently; lo >= hi is rejected with the offending pair
/// named in the message.
IntervalUnion set_from_json(const nlohmann::json& j);
IntervalUnion load_set_file(const std::string& path);

nlohmann::json set_to_json(const IntervalUnion& u);
nlohmann::json remnant_to_json(const ClosedRemnant& r);
nlohmann::json gap_result_to_json(const GapResult& g);
nlohmann::json construction_to_json(const ConstructionReport& r);

}  // namespace gapset
