#pragma once

#include <string>

#include "json.hpp"
#include "splitjac/igusa.hpp"
#include "splitjac/poly.hpp"
#include "splitjac/ramification.hpp"

namespace splitjac::cli {

using Json = nlohmann::json;

// Serialization conventions shared by every subcommand: rationals as "p/q"
// strings, polynomials as coefficient arrays ascending by degree, complex
// numbers as [re, im] pairs of doubles.
Json rational_json(const Rational& r);
Json ratpoly_json(const RatPoly& p);
Json complex_json(const Complex& z);
Json cpoly_json(const CPoly& p);
Json profile_json(const RamificationProfile& p);
Json igusa_json(const IgusaVector& v);
Json igusa_json(const IgusaVectorC& v);

// Document envelope. config must carry "rng_seed"; the thread count is
// deliberately not echoed so outputs stay byte-identical across thread
// counts.
Json envelope(const std::string& schema, Json config, Json result);

// Canonical rendering: 2-space indent, sorted keys (nlohmann default map
// order), trailing newline. One rendering everywhere keeps byte-level
// comparisons meaningful.
std::string dump_document(const Json& doc);

}  // namespace splitjac::cli
