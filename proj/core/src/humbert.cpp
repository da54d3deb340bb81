#include "splitjac/humbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace splitjac {

RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
  return {Rational(a.re + b.re), Rational(a.im + b.im)};
}

RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
  return {Rational(a.re - b.re), Rational(a.im - b.im)};
}

RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
  return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
}

RationalComplex operator*(const Rational& a, const RationalComplex& b) {
  return {Rational(a * b.re), Rational(a * b.im)};
}

Complex to_complex(const RationalComplex& z) { return {to_double(z.re), to_double(z.im)}; }

SiegelPoint::SiegelPoint(RationalComplex z1_, RationalComplex z2_, RationalComplex z3_)
    : z1(std::move(z1_)), z2(std::move(z2_)), z3(std::move(z3_)) {
  if (!(z1.im > 0))
    throw std::domain_error("Siegel point needs Im z1 > 0");
  if (!(z1.im * z3.im - z2.im * z2.im > 0))
    throw std::domain_error("Siegel point needs positive definite imaginary part");
}

SiegelPoint special_split_point(int n, RationalComplex z1, RationalComplex z3) {
  if (n < 1) throw std::domain_error("split form needs n >= 1");
  return SiegelPoint(std::move(z1), RationalComplex(Rational(1, n)), std::move(z3));
}

RationalComplex relation_residual(const SiegelPoint& p, const SingularRelation& r) {
  const RationalComplex quad = p.z2 * p.z2 - p.z1 * p.z3;
  RationalComplex out = Rational(static_cast<long>(r.a)) * p.z1 +
                        Rational(static_cast<long>(r.b)) * p.z2 +
                        Rational(static_cast<long>(r.c)) * p.z3 +
                        Rational(static_cast<long>(r.d)) * quad;
  out.re += Rational(static_cast<long>(r.e));
  return out;
}

long long discriminant(const SingularRelation& r) {
  return r.b * r.b - 4 * r.a * r.c - 4 * r.d * r.e;
}

bool humbert_nonempty(long long delta) {
  if (delta <= 0) return false;
  const long long m = delta % 4;
  return m == 0 || m == 1;
}

std::vector<FoundRelation> find_relation(const SiegelPoint& p, int height,
                                         std::optional<long long> target_delta, double tol) {
  if (height < 1) throw std::domain_error("search height must be at least 1");
  const Complex x1 = to_complex(p.z1);
  const Complex x2 = to_complex(p.z2);
  const Complex x3 = to_complex(p.z3);
  const Complex quad = x2 * x2 - x1 * x3;

  std::vector<FoundRelation> found;
  const int h = height;
  for (int a = -h; a <= h; ++a)
    for (int b = -h; b <= h; ++b)
      for (int c = -h; c <= h; ++c)
        for (int d = -h; d <= h; ++d) {
          const Complex partial = static_cast<double>(a) * x1 + static_cast<double>(b) * x2 +
                                  static_cast<double>(c) * x3 + static_cast<double>(d) * quad;
          for (int e = -h; e <= h; ++e) {
            if (a == 0 && b == 0 && c == 0 && d == 0 && e == 0) continue;
            const Complex res = partial + static_cast<double>(e);
            const double ar = std::abs(res);
            if (ar >= tol) continue;
            SingularRelation rel{a, b, c, d, e};
            const long long delta = discriminant(rel);
            if (target_delta.has_value() && delta != *target_delta) continue;
            found.push_back({rel, ar, delta});
          }
        }

  std::sort(found.begin(), found.end(), [](const FoundRelation& x, const FoundRelation& y) {
    if (x.abs_residual != y.abs_residual) return x.abs_residual < y.abs_residual;
    return std::tie(x.relation.a, x.relation.b, x.relation.c, x.relation.d, x.relation.e) <
           std::tie(y.relation.a, y.relation.b, y.relation.c, y.relation.d, y.relation.e);
  });
  return found;
}

}  // namespace splitjac
