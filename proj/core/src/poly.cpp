#include "splitjac/poly.hpp"

namespace splitjac {

RatPoly poly_gcd(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0)");
  RatPoly a = p, b = q;
  while (!b.is_zero()) {
    RatPoly r = RatPoly::divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

RatPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
  RatPoly acc;
  for (size_t i = 0; i < pts.size(); ++i) {
    RatPoly basis = RatPoly::constant(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      basis = basis * linear_root<Rational>(pts[j].first);
      denom *= pts[i].first - pts[j].first;
    }
    if (denom == 0) throw std::invalid_argument("interpolation nodes must be distinct");
    acc = acc + (pts[i].second / denom) * basis;
  }
  return acc;
}

}  // namespace splitjac
