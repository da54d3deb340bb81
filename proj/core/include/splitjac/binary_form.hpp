#pragma once

#include <stdexcept>
#include <vector>

#include "splitjac/poly.hpp"

namespace splitjac {

// Homogeneous bivariate form of fixed order m: sum of c[k] x^k y^(m-k).
// The order is nominal; coefficients may all vanish (the zero form of that
// order), which keeps derivative/transvectant bookkeeping uniform.
template <class S>
class BinaryForm {
 public:
  BinaryForm(int order, std::vector<S> coeffs)
      : order_(order), c_(std::move(coeffs)) {
    if (order_ < 0 || c_.size() != static_cast<size_t>(order_) + 1)
      throw std::invalid_argument("binary form: coefficient count != order + 1");
  }

  static BinaryForm zero(int order) {
    return BinaryForm(order, std::vector<S>(static_cast<size_t>(order) + 1, S(0)));
  }

  // Homogenization of a univariate polynomial to the given order.
  static BinaryForm from_poly(const Poly<S>& p, int order) {
    if (p.degree() > order)
      throw std::invalid_argument("binary form: order below polynomial degree");
    BinaryForm f = zero(order);
    for (int k = 0; k <= p.degree(); ++k) f.c_[static_cast<size_t>(k)] = p.coeff(k);
    return f;
  }

  int order() const { return order_; }
  const S& coeff(int xpow) const { return c_[static_cast<size_t>(xpow)]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!(v == S(0))) return false;
    return true;
  }

  // Value of an order-0 form.
  S constant() const {
    if (order_ != 0) throw std::domain_error("constant() on form of positive order");
    return c_[0];
  }

  BinaryForm dx() const {
    if (order_ == 0) return zero(0);
    BinaryForm r = zero(order_ - 1);
    for (int k = 1; k <= order_; ++k)
      r.c_[static_cast<size_t>(k - 1)] = S(k) * c_[static_cast<size_t>(k)];
    return r;
  }

  BinaryForm dy() const {
    if (order_ == 0) return zero(0);
    BinaryForm r = zero(order_ - 1);
    for (int k = 0; k < order_; ++k)
      r.c_[static_cast<size_t>(k)] = S(order_ - k) * c_[static_cast<size_t>(k)];
    return r;
  }

  BinaryForm mixed(int rx, int ry) const {
    BinaryForm r = *this;
    for (int i = 0; i < rx; ++i) r = r.dx();
    for (int i = 0; i < ry; ++i) r = r.dy();
    return r;
  }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("form order mismatch");
    BinaryForm r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }

  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("form order mismatch");
    BinaryForm r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r = zero(a.order_ + b.order_);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    return r;
  }

  friend BinaryForm operator*(const S& s, const BinaryForm& f) {
    BinaryForm r = f;
    for (auto& v : r.c_) v = s * v;
    return r;
  }

  bool operator==(const BinaryForm& o) const {
    return order_ == o.order_ && c_ == o.c_;
  }

  // f(a x + b y, c x + d y); same order, coefficients transformed.
  BinaryForm substitute(const S& a, const S& b, const S& c, const S& d) const {
    BinaryForm lx(1, {b, a});
    BinaryForm ly(1, {d, c});
    std::vector<BinaryForm> px{BinaryForm(0, {S(1)})};
    std::vector<BinaryForm> py{BinaryForm(0, {S(1)})};
    for (int k = 1; k <= order_; ++k) {
      px.push_back(px.back() * lx);
      py.push_back(py.back() * ly);
    }
    BinaryForm r = zero(order_);
    for (int k = 0; k <= order_; ++k) {
      if (c_[static_cast<size_t>(k)] == S(0)) continue;
      r = r + c_[static_cast<size_t>(k)] *
                  (px[static_cast<size_t>(k)] * py[static_cast<size_t>(order_ - k)]);
    }
    return r;
  }

 private:
  int order_;
  std::vector<S> c_;
};

// r-th transvectant of forms of orders m, p:
//   (m-r)!(p-r)!/(m! p!) * sum_k (-1)^k C(r,k) d^r f/dx^(r-k)dy^k * d^r g/dx^k dy^(r-k)
template <class S>
BinaryForm<S> transvectant(const BinaryForm<S>& f, const BinaryForm<S>& g, int r) {
  int m = f.order(), p = g.order();
  if (r > m || r > p)
    throw std::invalid_argument("transvectant index exceeds form order");
  long denom = 1;
  for (int i = 0; i < r; ++i) denom *= static_cast<long>(m - i) * (p - i);
  long binom = 1;
  BinaryForm<S> acc = BinaryForm<S>::zero(m + p - 2 * r);
  for (int k = 0; k <= r; ++k) {
    BinaryForm<S> term = f.mixed(r - k, k) * g.mixed(k, r - k);
    S c = S(static_cast<int>(binom));
    if (k % 2 == 1) c = -c;
    acc = acc + c * term;
    binom = binom * (r - k) / (k + 1);
  }
  return (S(1) / S(static_cast<int>(denom))) * acc;
}

}  // namespace splitjac
