#pragma once

#include "splitjac/poly.hpp"

namespace splitjac {

// Resultant of rational polynomials. Denominators are cleared first and the
// integer resultant is computed by a subresultant remainder sequence, so no
// intermediate fractions appear. Zero if either argument is zero.
Rational resultant(const RatPoly& p, const RatPoly& q);

// disc(p) = (-1)^{d(d-1)/2} Res(p, p') / lc(p) with d = deg p >= 1.
Rational discriminant(const RatPoly& p);

// Same quantities through a Sylvester-matrix determinant over complex
// doubles. Independent of the exact route; also serves numerically given
// polynomials.
Complex resultant(const CPoly& p, const CPoly& q);
Complex discriminant(const CPoly& p);

}  // namespace splitjac
