#pragma once

#include "chernum/chern.hpp"
#include "chernum/divisibility.hpp"

#include <string>
#include <vector>

namespace chernum {

struct CatalogSurface {
    SurfaceRecord surface;
    std::string note;
};

struct CatalogRecord {
    ChernRecord record;
    std::string note;
};

struct Catalog {
    int version = 0;
    std::vector<CatalogSurface> surfaces;
    std::vector<CatalogRecord> records;
    std::vector<std::string> notes;
};

// Parses the catalog schema. Records stored in the product basis
// ("basis": "products") are converted to monomial numbers on load.
Catalog parse_catalog(const std::string& json_text);

// The copy of data/catalog.json embedded at build time.
Catalog builtin_catalog();
const std::string& builtin_catalog_text();

} // namespace chernum
