#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "splitjac/rational.hpp"

namespace splitjac {

using Complex = std::complex<double>;

// Dense univariate polynomial over a field scalar S (Rational or Complex).
// Coefficients ascending by degree; the zero polynomial has no
// coefficients and degree -1. Degrees in this project stay small (<= ~60),
// so no attempt at sparse storage.
template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const S& v) { return Poly(std::vector<S>{v}); }
  static Poly identity_x() { return Poly(std::vector<S>{S(0), S(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of x^i, zero beyond the stored range.
  S coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return S(0);
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<S>& coeffs() const { return c_; }

  S lc() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  S eval(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<S> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<int>(i));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    Poly r = *this;
    S inv = S(1) / lc();
    for (auto& v : r.c_) v = v * inv;
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(const S& s, const Poly& p) {
    Poly r = p;
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Euclidean division over the field: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    std::vector<S> q(a.degree() >= b.degree()
                         ? static_cast<size_t>(a.degree() - b.degree() + 1)
                         : 0,
                     S(0));
    S binv = S(1) / b.lc();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int shift = rem.degree() - b.degree();
      S f = rem.lc() * binv;
      q[static_cast<size_t>(shift)] = f;
      for (size_t i = 0; i < b.c_.size(); ++i) {
        size_t k = i + static_cast<size_t>(shift);
        rem.c_[k] = rem.c_[k] - f * b.c_[i];
      }
      rem.c_.pop_back();
      rem.trim();
    }
    return {Poly(std::move(q)), rem};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }
  std::vector<S> c_;
};

using RatPoly = Poly<Rational>;
using CPoly = Poly<Complex>;

// Monic gcd over the exact field; throws if both inputs are zero.
RatPoly poly_gcd(const RatPoly& p, const RatPoly& q);

template <class S>
Poly<S> poly_pow(const Poly<S>& p, int e) {
  Poly<S> acc = Poly<S>::constant(S(1));
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

// Linear factor (x - root).
template <class S>
Poly<S> linear_root(const S& root) {
  return Poly<S>(std::vector<S>{-root, S(1)});
}

// Unique interpolating polynomial of degree < #points through the given
// (x, y) pairs; x values must be pairwise distinct.
RatPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& pts);

}  // namespace splitjac
