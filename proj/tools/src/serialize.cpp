#include "serialize.hpp"

#include <stdexcept>

namespace splitjac::cli {

Json rational_json(const Rational& r) { return to_string(r); }

Json ratpoly_json(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
  return a;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json cpoly_json(const CPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(complex_json(c));
  return a;
}

Json profile_json(const RamificationProfile& p) {
  Json fibers = Json::array();
  for (const auto& f : p.fibers) fibers.push_back(f);
  return fibers;
}

Json igusa_json(const IgusaVector& v) {
  return Json{{"J2", rational_json(v.J2)},
              {"J4", rational_json(v.J4)},
              {"J6", rational_json(v.J6)},
              {"J10", rational_json(v.J10)}};
}

Json igusa_json(const IgusaVectorC& v) {
  return Json{{"J2", complex_json(v.J2)},
              {"J4", complex_json(v.J4)},
              {"J6", complex_json(v.J6)},
              {"J10", complex_json(v.J10)}};
}

Json envelope(const std::string& schema, Json config, Json result) {
  if (!config.contains("rng_seed"))
    throw std::logic_error("document config is missing rng_seed");
  return Json{{"schema", schema}, {"config", std::move(config)}, {"result", std::move(result)}};
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace splitjac::cli
