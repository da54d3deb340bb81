#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace splitjac {

// Ramification data of a degree-n cover P^1 -> P^1: one multiset of indices
// >= 2 per branch point, kept sorted descending; unramified points in a fiber
// are implicit. A fiber may be empty (the branch point is then spurious).
struct RamificationProfile {
  int degree = 0;
  std::vector<std::vector<int>> fibers;
};

struct FiberCheck {
  int index_sum = 0;
  int implicit_points = 0;  // degree - index_sum
  bool feasible = false;    // all indices in [2, degree] and index_sum <= degree
};

struct ValidationReport {
  bool fibers_ok = false;    // every fiber feasible
  bool rh_ok = false;        // sum over fibers of (index - 1) equals 2n - 2
  bool implicit_ok = false;  // every implicit count nonnegative
  bool consistent = false;
  int rh_sum = 0;
  int rh_expected = 0;
  std::vector<FiberCheck> fiber_checks;
  std::vector<std::string> failures;  // deterministic, human-readable
};

// Inconsistency is reported, never thrown.
ValidationReport validate_profile(const RamificationProfile& p);

enum class CaseType { I, II, III };

const char* case_type_name(CaseType t);

// One entry of the even-degree induced-cover catalogue: the generic case of
// its type (degeneration_index 0) or one of the 15 printed degenerations.
// Entries carry the literal printed structure; anomalies are flagged through
// the validation report, never corrected.
struct CatalogueEntry {
  CaseType type = CaseType::I;
  int degeneration_index = 0;  // 0 = generic, else 1-based as printed
  std::string label;           // "I", "II.5", ...
  bool applicable = true;      // all symbolic counts nonnegative at this n
  int min_degree = 4;          // smallest even degree making the entry applicable
  RamificationProfile profile; // empty when inapplicable
  ValidationReport report;     // default when inapplicable
  bool consistent = false;
  std::optional<std::string> failure_reason;
  bool excluded_for_maximal = false;  // types II and III cannot come from maximal covers
};

// All 18 catalogue entries instantiated at even degree n >= 4.
std::vector<CatalogueEntry> theorem2_catalogue(int n);

// Parity of Weierstrass-point counts over the four 2-torsion branch values:
// counts must sum to 6; even-degree covers need every count even, odd-degree
// covers every count odd.
bool lemma2_parity_check(const std::array<int, 4>& counts, int n);

}  // namespace splitjac
