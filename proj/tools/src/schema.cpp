#include "schema.hpp"

namespace splitjac::cli {
namespace {

using nlohmann::json;

bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

void check(const json& v, const json& schema, const std::string& path,
           std::vector<std::string>& out) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(v, t.get<std::string>());
    } else if (t.is_array()) {
      for (const auto& alt : t)
        if (alt.is_string() && type_matches(v, alt.get<std::string>())) {
          ok = true;
          break;
        }
    }
    if (!ok) {
      out.push_back(path + ": type is " + std::string(v.type_name()) + ", schema wants " +
                    t.dump());
      return;  // deeper keywords assume the type matched
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"])
      if (alt == v) {
        ok = true;
        break;
      }
    if (!ok) out.push_back(path + ": value " + v.dump() + " not in enum");
  }
  if (v.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!v.contains(key.get<std::string>()))
          out.push_back(path + ": missing required key \"" + key.get<std::string>() + "\"");
    if (schema.contains("properties"))
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (v.contains(it.key())) check(v[it.key()], it.value(), path + "/" + it.key(), out);
  }
  if (v.is_array() && schema.contains("items")) {
    size_t i = 0;
    for (const auto& elem : v) check(elem, schema["items"], path + "/" + std::to_string(i++), out);
  }
}

}  // namespace

std::vector<std::string> schema_violations(const json& doc, const json& schema) {
  std::vector<std::string> out;
  check(doc, schema, "$", out);
  return out;
}

}  // namespace splitjac::cli
