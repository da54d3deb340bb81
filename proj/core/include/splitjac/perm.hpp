#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace splitjac {

// Permutation of {0..n-1} with n <= 12. Value type with packed storage;
// images beyond n are zero so default equality works.
class Perm {
 public:
  static constexpr int kMaxN = 12;

  Perm() = default;
  explicit Perm(int n);  // identity
  static Perm from_images(const std::vector<int>& images);

  int n() const { return n_; }
  int operator[](int i) const { return img_[static_cast<size_t>(i)]; }

  // (a*b)(x) = a(b(x)); the right factor acts first.
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  // g * this * g^{-1}
  Perm conjugated_by(const Perm& g) const;
  bool is_identity() const;

  // Full partition of n, descending, fixed points included.
  std::vector<int> cycle_type() const;
  // Counts of cycle lengths 1..12 packed 4 bits each; equal signatures
  // exactly for equal cycle types. Allocation-free for hot filters.
  uint64_t type_signature() const;
  // All cycles including fixed points, each starting at its least element,
  // sorted by (length, least element).
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Perm& o) const = default;
  bool operator<(const Perm& o) const;  // lex on images

  std::string cycle_string() const;  // "(0 1)(4 5)", fixed points omitted
  const std::array<uint8_t, kMaxN>& images() const { return img_; }

 private:
  int n_ = 0;
  std::array<uint8_t, kMaxN> img_{};
};

// Packs a full partition (descending, with fixed points) into the same
// 4-bit-count signature as Perm::type_signature.
uint64_t type_signature_of(int n, const std::vector<int>& type);

// Lexicographically least element of S_n with the given cycle type.
Perm base_of_type(int n, std::vector<int> type);

// Some h with h * p * h^{-1} = q; requires equal cycle types.
Perm conjugator(const Perm& p, const Perm& q);

// Every element of S_n with the given cycle type, deterministic order.
std::vector<Perm> elements_of_type(int n, const std::vector<int>& type);

// Every element commuting with p, deterministic order; size is the
// product over cycle-length classes of k! * len^k.
std::vector<Perm> centralizer_elements(const Perm& p);

// Order of <gens> via a Schreier-Sims stabilizer chain; exact for n <= 12.
uint64_t group_order(const std::vector<Perm>& gens);

}  // namespace splitjac
