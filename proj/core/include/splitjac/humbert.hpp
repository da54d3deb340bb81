#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "splitjac/poly.hpp"
#include "splitjac/rational.hpp"

namespace splitjac {

// Complex scalar with exact rational real and imaginary parts. The split-form
// checks go through this type, so "the residual is zero" is an exact
// statement, not a tolerance.
struct RationalComplex {
  Rational re, im;
  RationalComplex() : re(0), im(0) {}
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit RationalComplex(Rational r) : re(std::move(r)), im(0) {}
  friend bool operator==(const RationalComplex&, const RationalComplex&) = default;
};

RationalComplex operator+(const RationalComplex& a, const RationalComplex& b);
RationalComplex operator-(const RationalComplex& a, const RationalComplex& b);
RationalComplex operator*(const RationalComplex& a, const RationalComplex& b);
RationalComplex operator*(const Rational& a, const RationalComplex& b);
Complex to_complex(const RationalComplex& z);

// Point [[z1, z2],[z2, z3]] of the Siegel upper half space: the imaginary
// part must be positive definite. The constructor checks this exactly.
struct SiegelPoint {
  RationalComplex z1, z2, z3;
  SiegelPoint(RationalComplex z1_, RationalComplex z2_, RationalComplex z3_);
};

// [[z1, 1/n],[1/n, z3]]: the normal form for points of the Humbert surface of
// discriminant n^2, where the abelian surface splits (n,n).
SiegelPoint special_split_point(int n, RationalComplex z1, RationalComplex z3);

// a z1 + b z2 + c z3 + d(z2^2 - z1 z3) + e = 0 with integer coefficients,
// not all zero (all-zero quintuples are rejected by the search and the CLI,
// not here).
struct SingularRelation {
  long long a = 0, b = 0, c = 0, d = 0, e = 0;
  bool all_zero() const { return a == 0 && b == 0 && c == 0 && d == 0 && e == 0; }
  friend bool operator==(const SingularRelation&, const SingularRelation&) = default;
};

// a z1 + b z2 + c z3 + d(z2^2 - z1 z3) + e, exactly.
RationalComplex relation_residual(const SiegelPoint& p, const SingularRelation& r);

// b^2 - 4ac - 4de
long long discriminant(const SingularRelation& r);

// H_delta is nonempty iff delta > 0 and delta is 0 or 1 mod 4.
bool humbert_nonempty(long long delta);

struct FoundRelation {
  SingularRelation relation;
  double abs_residual = 0;
  long long delta = 0;
};

// Exhaustive search over |a|,...,|e| <= height, keeping quintuples whose
// residual magnitude (float64) is below tol, optionally filtered by
// discriminant; sorted by |residual|, ties by lexicographic quintuple.
std::vector<FoundRelation> find_relation(const SiegelPoint& p, int height,
                                         std::optional<long long> target_delta = std::nullopt,
                                         double tol = 1e-9);

}  // namespace splitjac
