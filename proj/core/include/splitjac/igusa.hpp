#pragma once

#include <array>

#include "splitjac/poly.hpp"

namespace splitjac {

template <class S>
struct IgusaT {
  S J2, J4, J6, J10;
};
using IgusaVector = IgusaT<Rational>;
using IgusaVectorC = IgusaT<Complex>;

// Genus-2 curve y^2 = f(x) with deg f in {5, 6} and f squarefree. A degree-5
// model has one branch point at infinity; invariants are taken of the order-6
// homogenization either way.
class GenusTwoCurve {
 public:
  explicit GenusTwoCurve(RatPoly f);
  const RatPoly& f() const { return f_; }

 private:
  RatPoly f_;
};

// Weight-(2, 4, 6, 10) invariants of the binary sextic. J10 equals the
// discriminant of the degree-6 homogenization under this normalization, so
// J10 != 0 exactly for smooth curves.
IgusaVector igusa_invariants(const GenusTwoCurve& c);

// Floating backend for numerically given models (degree 5 or 6).
IgusaVectorC igusa_invariants(const CPoly& f);

// Weight-0 moduli coordinates. Chart J2 != 0 uses
// (J2^5/J10, J2^3 J4/J10, J2^2 J6/J10); the J2 = 0 chart falls back to
// (J4^5/J10^2, J4 J6/J10, J6^5/J10^3). The chart predicate J2 = 0 is itself
// GL2-invariant, so equal curves always land in the same chart.
struct AbsoluteInvariants {
  bool j2_chart;
  std::array<Rational, 3> values;
  bool operator==(const AbsoluteInvariants&) const = default;
};
AbsoluteInvariants absolute_invariants(const IgusaVector& v);

}  // namespace splitjac
