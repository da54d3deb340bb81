#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitjac/perm.hpp"

namespace splitjac {

// Branch-cycle tuple. Product-one and transitivity are queried, not
// enforced on construction, so partial tuples can be assembled freely.
struct NielsenTuple {
  std::vector<Perm> sigma;

  int n() const { return sigma.empty() ? 0 : sigma[0].n(); }
  size_t r() const { return sigma.size(); }
  Perm product() const;
  bool is_product_one() const;
  bool is_transitive() const;
  std::vector<std::vector<int>> cycle_types() const;

  // Concatenated image bytes; doubles as hash key and total order.
  std::string key() const;
  static NielsenTuple from_key(int n, size_t r, const std::string& key);

  bool operator==(const NielsenTuple& o) const { return sigma == o.sigma; }
};

// Canonical representative of the simultaneous-conjugation class: position 0
// is conjugated onto the base permutation of its cycle type, then the
// leftover centralizer freedom is resolved by lexicographic minimization .
NielsenTuple canonical_form(const NielsenTuple& t);

// Hurwitz move Q_i: (.., s_i, s_{i+1}, ..) -> (.., s_i s_{i+1} s_i^{-1}, s_i, ..),
// 0-based i < r-1, and its inverse (.., s_{i+1}, s_{i+1}^{-1} s_i s_{i+1}, ..).
NielsenTuple hurwitz_move(const NielsenTuple& t, size_t i);
NielsenTuple hurwitz_move_inverse(const NielsenTuple& t, size_t i);

// Cycle-type lists in the compact text form "2^3,2^3,4.2,2^4": comma
// between branch points, '.' between parts, '^' for repetition. Parts not
// written are implicit fixed points. Throws std::invalid_argument on
// malformed text or parts < 1.
std::vector<std::vector<int>> parse_cycle_types(const std::string& text);
std::string cycle_types_to_string(const std::vector<std::vector<int>>& types);

struct EnumerationResult {
  std::vector<NielsenTuple> classes;  // canonical representatives, sorted by key
  uint64_t tuples_examined = 0;
  std::optional<std::string> diagnostic;  // set when the types are infeasible
};

// One canonical representative per simultaneous-conjugacy class of
// product-one transitive tuples with the given ordered cycle types.
// Deterministic output for any thread count.
EnumerationResult enumerate_nielsen(int n,
                                    const std::vector<std::vector<int>>& cycle_types,
                                    int threads = 1);

struct BraidOrbit {
  NielsenTuple representative;  // least canonical form in the orbit
  // Classes in the orbit whose ordered signature matches the seed class.
  // A braid orbit necessarily visits every ordering of its cycle-type
  // multiset, and the per-ordering fiber sizes are equal; the table being
  // reproduced counts one fiber.
  uint64_t length = 0;
  uint64_t total_classes = 0;  // classes across all orderings
  uint64_t group_order = 0;
  std::optional<int> genus;    // 4-point orbits, filled by orbit_genus
  std::vector<NielsenTuple> members;  // sorted canonical forms, all orderings
  // Per-position cycle-type signatures of the seed class; the genus action
  // works on the fiber of members carrying exactly this signature.
  std::vector<uint64_t> seed_signature;
};

// Partition classes under Hurwitz moves modulo simultaneous conjugation.
// Inputs must share degree, tuple length and cycle-type multiset; orbits are
// returned sorted by representative.
std::vector<BraidOrbit> braid_orbits(const std::vector<NielsenTuple>& classes);

uint64_t group_order(const NielsenTuple& t);

// Braid words as move sequences: entry +i applies Q_i, entry -i applies
// Q_i^{-1} (1-based), left to right.
struct BraidWordTriple {
  std::vector<int> gamma0, gamma1, gamma_inf;
};

// The calibrated mapping-class convention for 4-point orbits: pure braid
// words carrying the last branch point once around each of the first three,
//   gamma0   = Q3 Q2 Q1^2 Q2^{-1} Q3^{-1}
//   gamma1   = Q3 Q2^2 Q3^{-1}
//   gamma_inf = Q3^2
// They preserve the ordered signature, and their product acts trivially in
// any cyclic order. Chosen so the known genus-0 orbit computes to 0; see
// docs/genus-convention.md.
const BraidWordTriple& genus_convention();

struct ReducedActionReport {
  uint64_t reduced_count = 0;  // L, the size of the seed-signature fiber
  bool well_defined = false;   // words act as bijections of the fiber
  bool product_one = false;    // some cyclic ordering of the actions is trivial
  std::array<uint64_t, 3> cycle_counts{};  // of gamma0, gamma1, gamma_inf
  uint64_t components = 0;     // joint orbits of the three actions
  int genus = -1;              // valid when well_defined and product_one
};

// Action of the three mapping-class words on the classes whose ordered
// signature equals the orbit's seed signature; 4-point orbits only.
ReducedActionReport reduced_action(const BraidOrbit& o, const BraidWordTriple& w);

// Genus of the 4-point orbit curve: 2 - 2g = 2L - sum ind(gamma),
// ind(gamma) = L - #cycles(gamma), under the calibrated convention.
int orbit_genus(const BraidOrbit& o);

}  // namespace splitjac
