#include "chernum/json_io.hpp"

namespace chernum {

Json record_to_json(const ChernRecord& r) {
    Json j;
    j["name"] = r.name;
    j["dimension"] = r.dimension;
    j["convention"] = to_string(r.convention);
    Json numbers = Json::array();
    for (const auto& [part, c] : r.numbers)
        numbers.push_back({{"partition", partition_to_json(part)}, {"coeff", coeff_string(c)}});
    j["numbers"] = std::move(numbers);
    j["complete"] = r.complete;
    return j;
}

ChernRecord record_from_json(const Json& j) {
    ChernRecord r;
    r.name = j.value("name", "");
    r.dimension = j.at("dimension").get<int>();
    if (r.dimension < 1) throw std::invalid_argument("record: dimension must be >= 1");
    const std::string conv = j.at("convention").get<std::string>();
    if (conv == "tangent") {
        r.convention = Convention::tangent;
    } else if (conv == "normal") {
        r.convention = Convention::normal;
    } else {
        throw std::invalid_argument("record: convention must be 'tangent' or 'normal'");
    }
    for (const Json& term : j.at("numbers")) {
        Partition p = partition_from_json(term.at("partition"));
        if (p.weight() != r.dimension)
            throw std::invalid_argument("record: partition weight differs from dimension");
        r.numbers[p] = int_from_string(term.at("coeff").get<std::string>());
    }
    if (j.contains("complete")) {
        r.complete = j.at("complete").get<bool>();
        if (r.complete && r.numbers.size() != partitions_of(r.dimension).size())
            throw std::invalid_argument("record: marked complete but entries are missing");
    } else {
        r.complete = r.numbers.size() == partitions_of(r.dimension).size();
    }
    return r;
}

Json census_to_json(const FaceCensus& c) {
    Json j;
    j["polytope"] = to_string(c.polytope);
    j["weight"] = c.n;
    Json terms = Json::array();
    for (const auto& [part, count] : c.counts)
        terms.push_back({{"partition", partition_to_json(part)}, {"coeff", coeff_string(count)}});
    j["terms"] = std::move(terms);
    return j;
}

Json verdict_to_json(const DivisibilityVerdict& v) {
    Json j;
    j["d"] = coeff_string(v.d);
    j["chi"] = coeff_string(v.chi);
    j["extremely_divisible"] = v.extremely_divisible;
    if (v.witnessed) j["witnessed"] = true;
    return j;
}

Json surface_to_json(const SurfaceRecord& s) {
    Json j;
    j["name"] = s.name;
    j["c1sq"] = coeff_string(s.c1sq);
    j["c2"] = coeff_string(s.c2);
    return j;
}

} // namespace chernum
