#include "gapset/set_io.hpp"

#include <fstream>
#include <stdexcept>

namespace gapset {

IntervalUnion set_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array())
        throw std::invalid_argument("set file must be an object with an \"intervals\" array");
    std::vector<OpenInterval> parts;
    for (const auto& pair : j["intervals"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw std::invalid_argument("interval entry must be a [\"lo\",\"hi\"] string pair, got " +
                                        pair.dump());
        const Rational lo = parse_rational(pair[0].get<std::string>());
        const Rational hi = parse_rational(pair[1].get<std::string>());
        if (!(lo < hi))
            throw std::invalid_argument("interval [" + pair[0].get<std::string>() + ", " +
                                        pair[1].get<std::string>() + "] has lo >= hi");
        parts.push_back({lo, hi});
    }
    if (parts.empty()) throw std::invalid_argument("set file describes an empty set");
    return IntervalUnion::normalized(std::move(parts));
}

IntervalUnion load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set file: " + path);
    nlohmann::json j;
    in >> j;
    return set_from_json(j);
}

nlohmann::json set_to_json(const IntervalUnion& u) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const auto& p : u.parts())
        intervals.push_back({to_string(p.lo), to_string(p.hi)});
    return {{"intervals", intervals}};
}

nlohmann::json remnant_to_json(const ClosedRemnant& r) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : r.pieces) pieces.push_back({to_string(p.lo), to_string(p.hi)});
    return pieces;
}

nlohmann::json gap_result_to_json(const GapResult& g) {
    return {{"gap", to_string(g.gap)},
            {"truncation_bound", to_string(g.truncation_bound)},
            {"remnant", remnant_to_json(g.remnant)},
            {"iterations", g.iterations}};
}

nlohmann::json construction_to_json(const ConstructionReport& r) {
    nlohmann::json j = {{"set", set_to_json(r.set)},
                        {"alpha", to_string(r.alpha)},
                        {"predicted_gap", to_string(r.predicted_gap)}};
    if (r.params) {
        j["params"] = {{"k", r.params->k},
                       {"x", to_string(r.params->x)},
                       {"t", to_string(r.params->t)}};
    }
    return j;
}

}  // namespace gapset
