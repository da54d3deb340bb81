#include "splitjac/resultant.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace splitjac {

namespace {

// Integer polynomials ascending by degree, invariant: no trailing zeros.
using ZPoly = std::vector<Integer>;

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zgcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer zpow(const Integer& a, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = zgcd(g, c);
  return g == 0 ? Integer(1) : g;
}

void zdivexact_scalar(ZPoly& p, const Integer& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, deg a >= deg b >= 0.
// When the degree drops by more than one per step the missing powers of
// lc(b) are restored at the end.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const Integer lb = b.back();
  const int db = zdeg(b);
  int e = zdeg(a) - db + 1;
  while (!a.empty() && zdeg(a) >= db) {
    int shift = zdeg(a) - db;
    Integer top = a.back();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + static_cast<size_t>(shift)] -= top * b[i];
    ztrim(a);
    --e;
  }
  if (e > 0 && !a.empty()) {
    Integer f = zpow(lb, static_cast<unsigned long>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

// Subresultant PRS resultant over Z (Cohen, Alg. 3.3.7). Inputs nonzero.
Integer zresultant(ZPoly A, ZPoly B) {
  int sign = 1;
  if (zdeg(A) < zdeg(B)) {
    if ((zdeg(A) & 1) && (zdeg(B) & 1)) sign = -sign;
    std::swap(A, B);
  }
  if (zdeg(B) == 0) {
    Integer r = zpow(B[0], static_cast<unsigned long>(zdeg(A)));
    return sign > 0 ? r : -r;
  }
  Integer ca = zcontent(A), cb = zcontent(B);
  zdivexact_scalar(A, ca);
  zdivexact_scalar(B, cb);
  Integer t = zpow(ca, static_cast<unsigned long>(zdeg(B))) *
              zpow(cb, static_cast<unsigned long>(zdeg(A)));
  Integer g = 1, h = 1;
  for (;;) {
    int dA = zdeg(A), dB = zdeg(B);
    int delta = dA - dB;
    if ((dA & 1) && (dB & 1)) sign = -sign;
    ZPoly R = zprem(A, B);
    A = std::move(B);
    if (R.empty()) return 0;
    Integer divisor = g * zpow(h, static_cast<unsigned long>(delta));
    zdivexact_scalar(R, divisor);
    B = std::move(R);
    g = A.back();
    if (delta > 0) {
      Integer gn = zpow(g, static_cast<unsigned long>(delta));
      if (delta > 1) {
        Integer hd = zpow(h, static_cast<unsigned long>(delta - 1));
        mpz_divexact(h.get_mpz_t(), gn.get_mpz_t(), hd.get_mpz_t());
      } else {
        h = gn;
      }
    }
    if (zdeg(B) == 0) break;
  }
  int dA = zdeg(A);
  Integer num = zpow(B[0], static_cast<unsigned long>(dA));
  if (dA > 1) {
    Integer hd = zpow(h, static_cast<unsigned long>(dA - 1));
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), hd.get_mpz_t());
  }
  num *= t;
  return sign > 0 ? num : -num;
}

Integer zlcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Clears denominators: returns P with p = P / scale.
ZPoly clear_denominators(const RatPoly& p, Integer& scale) {
  scale = 1;
  for (const auto& c : p.coeffs()) scale = zlcm(scale, c.get_den());
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(scale);
    out.push_back(scaled.get_num());
  }
  return out;
}

}  // namespace

Rational resultant(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  Integer sp, sq;
  ZPoly P = clear_denominators(p, sp);
  ZPoly Q = clear_denominators(q, sq);
  Integer r = zresultant(P, Q);
  // Res(P/sp, Q/sq) = sp^{-deg q} sq^{-deg p} Res(P, Q)
  Rational den = Rational(zpow(sp, static_cast<unsigned long>(q.degree()))) *
                 Rational(zpow(sq, static_cast<unsigned long>(p.degree())));
  return Rational(r) / den;
}

Rational discriminant(const RatPoly& p) {
  int d = p.degree();
  if (d < 1) throw std::domain_error("discriminant needs degree >= 1");
  Rational r = resultant(p, p.derivative()) / p.lc();
  return (d * (d - 1) / 2) % 2 == 0 ? r : -r;
}

Complex resultant(const CPoly& p, const CPoly& q) {
  int m = p.degree(), n = q.degree();
  if (p.is_zero() || q.is_zero()) return Complex(0.0);
  if (m == 0 && n == 0) return Complex(1.0);
  if (m == 0) return std::pow(p.coeff(0), n);
  if (n == 0) return std::pow(q.coeff(0), m);
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S(i, i + j) = p.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S(n + i, i + j) = q.coeff(n - j);
  return S.fullPivLu().determinant();
}

Complex discriminant(const CPoly& p) {
  int d = p.degree();
  if (d < 1) throw std::domain_error("discriminant needs degree >= 1");
  Complex r = resultant(p, p.derivative()) / p.lc();
  return (d * (d - 1) / 2) % 2 == 0 ? r : -r;
}

}  // namespace splitjac
