#pragma once

#include <filesystem>

#include <json.hpp>

#include "cmsym/classify.hpp"
#include "cmsym/complex.hpp"
#include "cmsym/ideal.hpp"

namespace cmsym::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"n": 5, "facets": [[1,2], ...]}. Throws InputError on any shape error.
SimplicialComplex complex_from_json(const Json& doc);
Json complex_to_json(const SimplicialComplex& complex);

/// {"n": 4, "components": [{"facet": [1,2], "exponent": 3}, ...]}.
MonomialIdeal ideal_from_json(const Json& doc);
Json ideal_to_json(const MonomialIdeal& ideal);

/// Reads and parses a file; unreadable files and bad JSON become InputError.
Json load_json(const std::filesystem::path& path);

Json vertex_set_to_json(VertexSet s);
VertexSet vertex_set_from_json(const Json& doc, int n);

/// Schema-stable report encoding with "v": 1; report_from_json inverts it.
Json report_to_json(const CMReport& report);
CMReport report_from_json(const Json& doc);

}  // namespace cmsym::cli
