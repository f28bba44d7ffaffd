#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace seamlab {

// Structural validator for the subset of JSON Schema the report schema
// actually uses: type (object/array/string/number/integer/boolean),
// required, properties, items, enum.  Returns human-readable violations
// with JSON-pointer-ish locations; empty means the document validates.
// Deliberately not a general validator -- the schema file is ours and
// stays inside this subset.
std::vector<std::string> schema_violations(const nlohmann::json& doc,
                                           const nlohmann::json& schema);

} // namespace seamlab
