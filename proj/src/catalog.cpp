#include "chernum/catalog.hpp"

#include "chernum/json_io.hpp"
#include "chernum/symmetric.hpp"

#include "catalog_data.hpp"

namespace chernum {

Catalog parse_catalog(const std::string& json_text) {
    Json j = Json::parse(json_text);
    Catalog catalog;
    catalog.version = j.at("version").get<int>();
    for (const Json& js : j.value("surfaces", Json::array())) {
        CatalogSurface s;
        s.surface.name = js.at("name").get<std::string>();
        s.surface.c1sq = int_from_string(js.at("c1sq").get<std::string>());
        s.surface.c2 = int_from_string(js.at("c2").get<std::string>());
        s.note = js.value("note", "");
        catalog.surfaces.push_back(std::move(s));
    }
    for (const Json& jr : j.value("records", Json::array())) {
        CatalogRecord r;
        r.note = jr.value("note", "");
        const std::string basis = jr.value("basis", "monomial");
        if (basis == "products") {
            Json monomial = jr;
            monomial.erase("numbers");
            monomial.erase("complete");
            monomial["numbers"] = Json::array();
            ChernRecord parsed = record_from_json(monomial);
            IntByPartition products;
            for (const Json& term : jr.at("numbers"))
                products.emplace(partition_from_json(term.at("partition")),
                                 int_from_string(term.at("coeff").get<std::string>()));
            parsed.numbers =
                chern_basis_convert(products, BasisDirection::products_to_monomial);
            parsed.complete =
                parsed.numbers.size() == partitions_of(parsed.dimension).size();
            r.record = std::move(parsed);
        } else if (basis == "monomial") {
            r.record = record_from_json(jr);
        } else {
            throw std::invalid_argument("catalog: basis must be 'monomial' or 'products'");
        }
        catalog.records.push_back(std::move(r));
    }
    for (const Json& note : j.value("notes", Json::array()))
        catalog.notes.push_back(note.get<std::string>());
    return catalog;
}

const std::string& builtin_catalog_text() {
    static const std::string text = kCatalogJson;
    return text;
}

Catalog builtin_catalog() { return parse_catalog(builtin_catalog_text()); }

} // namespace chernum
