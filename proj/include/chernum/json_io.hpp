#pragma once

#include "chernum/chern.hpp"
#include "chernum/divisibility.hpp"
#include "chernum/graded_poly.hpp"
#include "chernum/polytopes.hpp"

#include <json.hpp>

#include <string>
#include <type_traits>
#include <vector>

namespace chernum {

using Json = nlohmann::ordered_json;

inline Json partition_to_json(const Partition& p) {
    return Json(p.parts());
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected an array");
    return Partition(j.get<std::vector<int>>());
}

// {"weight": n, "terms": [{"partition": [...], "coeff": "<decimal string>"}]},
// terms in reverse-lexicographic partition order; theta-namespace polynomials
// additionally carry "namespace": "theta".
template <typename C, typename Tag>
Json poly_to_json(const GradedPoly<C, Tag>& p) {
    Json j;
    j["weight"] = p.max_weight();
    if constexpr (std::is_same_v<Tag, ThetaVars>) j["namespace"] = "theta";
    Json terms = Json::array();
    for (const auto& [part, c] : p.terms())
        terms.push_back({{"partition", partition_to_json(part)}, {"coeff", coeff_string(c)}});
    j["terms"] = std::move(terms);
    return j;
}

template <typename C, typename Tag>
GradedPoly<C, Tag> poly_from_json(const Json& j) {
    if constexpr (std::is_same_v<Tag, ThetaVars>) {
        if (j.value("namespace", "theta") != "theta")
            throw std::invalid_argument("polynomial: wrong variable namespace");
    } else {
        if (j.value("namespace", "t") != "t")
            throw std::invalid_argument("polynomial: wrong variable namespace");
    }
    GradedPoly<C, Tag> p;
    for (const Json& term : j.at("terms")) {
        const std::string coeff = term.at("coeff").get<std::string>();
        if constexpr (std::is_same_v<C, Int>)
            p.add_term(partition_from_json(term.at("partition")), int_from_string(coeff));
        else
            p.add_term(partition_from_json(term.at("partition")), rational_from_string(coeff));
    }
    return p;
}

Json record_to_json(const ChernRecord& r);
ChernRecord record_from_json(const Json& j);

Json census_to_json(const FaceCensus& c);

Json verdict_to_json(const DivisibilityVerdict& v);

Json surface_to_json(const SurfaceRecord& s);

} // namespace chernum
