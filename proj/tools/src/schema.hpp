#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace splitjac::cli {

// Validator for the JSON-schema subset the shipped schemas use: "type"
// (string or array of strings), "required", "properties", "items" (single
// schema), "enum". Other keywords are ignored; keys without a property
// schema are allowed. Returns human-readable violations, empty iff valid.
std::vector<std::string> schema_violations(const nlohmann::json& doc,
                                           const nlohmann::json& schema);

}  // namespace splitjac::cli
