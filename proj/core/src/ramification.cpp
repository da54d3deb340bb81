#include "splitjac/ramification.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace splitjac {

ValidationReport validate_profile(const RamificationProfile& p) {
  ValidationReport rep;
  const int n = p.degree;
  rep.rh_expected = 2 * n - 2;
  rep.fibers_ok = true;
  rep.implicit_ok = true;
  for (size_t fi = 0; fi < p.fibers.size(); ++fi) {
    FiberCheck fc;
    bool indices_ok = true;
    for (int e : p.fibers[fi]) {
      fc.index_sum += e;
      if (e < 2 || e > n) indices_ok = false;
      rep.rh_sum += e - 1;
    }
    fc.implicit_points = n - fc.index_sum;
    fc.feasible = indices_ok && fc.index_sum <= n;
    if (!indices_ok) {
      std::ostringstream os;
      os << "fiber " << fi + 1 << " has an index outside [2, " << n << "]";
      rep.failures.push_back(os.str());
      rep.fibers_ok = false;
    }
    if (fc.index_sum > n) {
      std::ostringstream os;
      os << "fiber " << fi + 1 << " index sum " << fc.index_sum
         << " exceeds degree " << n;
      rep.failures.push_back(os.str());
      rep.fibers_ok = false;
      rep.implicit_ok = false;
    }
    rep.fiber_checks.push_back(fc);
  }
  rep.rh_ok = rep.rh_sum == rep.rh_expected;
  if (!rep.rh_ok) {
    std::ostringstream os;
    os << "Riemann-Hurwitz sum " << rep.rh_sum << ", expected "
       << rep.rh_expected;
    rep.failures.push_back(os.str());
  }
  rep.consistent = rep.fibers_ok && rep.rh_ok && rep.implicit_ok;
  return rep;
}

const char* case_type_name(CaseType t) {
  switch (t) {
    case CaseType::I: return "I";
    case CaseType::II: return "II";
    case CaseType::III: return "III";
  }
  return "?";
}

namespace {

// (index)^count with count either the fixed value `offset` or the symbolic
// (n + offset)/2 when `half` is set.
struct PartSpec {
  int index;
  int offset;
  bool half;
};

using FiberSpec = std::vector<PartSpec>;

struct EntrySpec {
  CaseType type;
  int idx;
  std::vector<FiberSpec> fibers;
};

// The printed catalogue. Five-fiber rows are the generic cases; the rest are
// the degenerations, four fibers each, in printed order.
const std::vector<EntrySpec>& catalogue_specs() {
  static const std::vector<EntrySpec> specs = {
      {CaseType::I, 0,
       {{{2, -2, true}}, {{2, -2, true}}, {{2, -2, true}}, {{2, 0, true}}, {{2, 1, false}}}},
      {CaseType::II, 0,
       {{{2, -4, true}}, {{2, -2, true}}, {{2, 0, true}}, {{2, 0, true}}, {{2, 1, false}}}},
      {CaseType::III, 0,
       {{{2, -6, true}}, {{2, 0, true}}, {{2, 0, true}}, {{2, 0, true}}, {{2, 1, false}}}},
      {CaseType::I, 1,
       {{{2, 0, true}}, {{2, -2, true}}, {{2, -2, true}}, {{2, 0, true}}}},
      {CaseType::I, 2,
       {{{2, -2, true}}, {{2, -2, true}}, {{4, 1, false}, {2, -6, true}}, {{2, 0, true}}}},
      {CaseType::I, 3,
       {{{2, -2, true}}, {{2, -2, true}}, {{2, -2, true}}, {{4, 1, false}, {2, -4, true}}}},
      {CaseType::I, 4,
       {{{3, 1, false}, {2, -4, true}}, {{2, -2, true}}, {{2, -2, true}}, {{2, 0, true}}}},
      {CaseType::II, 1,
       {{{2, -2, true}}, {{2, -2, true}}, {{2, 0, true}}, {{2, 0, true}}}},
      {CaseType::II, 2,
       {{{2, -4, true}}, {{2, 0, true}}, {{2, 0, true}}, {{2, 0, true}}}},
      {CaseType::II, 3,
       {{{4, 1, false}, {2, -8, true}}, {{2, -2, true}}, {{2, 0, true}}, {{2, 0, true}}}},
      {CaseType::II, 4,
       {{{2, -4, true}}, {{4, 1, false}, {2, -6, true}}, {{2, 0, true}}, {{2, 0, true}}}},
      {CaseType::II, 5,
       {{{2, -4, true}}, {{2, -2, true}}, {{2, -4, true}}, {{2, 0, true}}}},
      {CaseType::II, 6,
       {{{3, 1, false}, {2, -6, true}}, {{2, -2, true}}, {{4, 1, false}, {2, 0, true}}, {{2, 0, true}}}},
      {CaseType::II, 7,
       {{{2, -4, true}}, {{3, 1, false}, {2, -4, true}}, {{2, 0, true}}, {{2, 0, true}}}},
      {CaseType::III, 1,
       {{{2, -4, true}}, {{2, 0, true}}, {{2, 0, true}}, {{4, 1, false}, {2, 0, true}}}},
      {CaseType::III, 2,
       {{{2, -6, true}}, {{4, 1, false}, {2, -4, true}}, {{2, 0, true}}, {{2, 0, true}}}},
      {CaseType::III, 3,
       {{{2, 0, true}}, {{2, 0, true}}, {{2, 0, true}}, {{4, 1, false}, {2, -10, true}}}},
      {CaseType::III, 4,
       {{{3, 1, false}, {2, -8, true}}, {{2, 0, true}}, {{2, 0, true}}, {{2, 0, true}}}},
  };
  return specs;
}

}  // namespace

std::vector<CatalogueEntry> theorem2_catalogue(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::domain_error("catalogue needs an even degree n >= 4");
  std::vector<CatalogueEntry> out;
  for (const EntrySpec& spec : catalogue_specs()) {
    CatalogueEntry e;
    e.type = spec.type;
    e.degeneration_index = spec.idx;
    e.label = case_type_name(spec.type);
    if (spec.idx > 0) e.label += "." + std::to_string(spec.idx);
    e.excluded_for_maximal = spec.type != CaseType::I;
    e.min_degree = 4;
    for (const FiberSpec& f : spec.fibers)
      for (const PartSpec& part : f)
        if (part.half && -part.offset > e.min_degree) e.min_degree = -part.offset;
    if (e.min_degree % 2 != 0) ++e.min_degree;
    e.applicable = n >= e.min_degree;
    if (!e.applicable) {
      e.consistent = false;
      e.failure_reason = "inapplicable below degree " +
                         std::to_string(e.min_degree) +
                         ": a symbolic point count is negative";
      out.push_back(std::move(e));
      continue;
    }
    e.profile.degree = n;
    for (const FiberSpec& f : spec.fibers) {
      std::vector<int> fiber;
      for (const PartSpec& part : f) {
        int count = part.half ? (n + part.offset) / 2 : part.offset;
        for (int i = 0; i < count; ++i) fiber.push_back(part.index);
      }
      std::sort(fiber.begin(), fiber.end(), std::greater<int>());
      e.profile.fibers.push_back(std::move(fiber));
    }
    e.report = validate_profile(e.profile);
    e.consistent = e.report.consistent;
    if (!e.consistent) {
      std::string reason;
      for (const auto& msg : e.report.failures) {
        if (!reason.empty()) reason += "; ";
        reason += msg;
      }
      e.failure_reason = reason;
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool lemma2_parity_check(const std::array<int, 4>& counts, int n) {
  int total = 0;
  for (int c : counts) {
    if (c < 0) throw std::domain_error("negative Weierstrass count");
    total += c;
  }
  if (total != 6) throw std::domain_error("Weierstrass counts must sum to 6");
  const int want = n % 2 == 0 ? 0 : 1;
  for (int c : counts)
    if (c % 2 != want) return false;
  return true;
}

}  // namespace splitjac
