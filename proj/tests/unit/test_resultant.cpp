#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "splitjac/resultant.hpp"

using namespace splitjac;

namespace {

CPoly to_cpoly(const RatPoly& p) {
  std::vector<Complex> c;
  for (const auto& v : p.coeffs()) c.emplace_back(to_double(v), 0.0);
  return CPoly(c);
}

}  // namespace

TEST_SUITE("resultant") {

TEST_CASE("discriminant classics") {
  RatPoly p({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  CHECK(discriminant(p) == Rational(4));
  RatPoly dbl({Rational(1), Rational(2), Rational(1)});  // (x+1)^2
  CHECK(discriminant(dbl) == Rational(0));
}

TEST_CASE("six-factorial discriminant fixture") {
  RatPoly p = RatPoly::constant(Rational(1));
  for (int k = 0; k <= 5; ++k) p = p * linear_root(Rational(k));
  CHECK(discriminant(p) == parse_rational(testutil::oracle_entry("disc_sixfactorial_poly")));
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> c(5);
    for (auto& v : c) v = Rational(coeff(rng));
    RatPoly p(c);
    if (p.degree() < 1) continue;
    bool disc_zero = discriminant(p) == Rational(0);
    bool gcd_nontrivial = poly_gcd(p, p.derivative()).degree() >= 1;
    CHECK(disc_zero == gcd_nontrivial);
  }
}

TEST_CASE("exact and Sylvester routes agree") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> ac(static_cast<size_t>(deg(rng)) + 1), bc(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : ac) v = Rational(coeff(rng));
    for (auto& v : bc) v = Rational(coeff(rng));
    RatPoly a(ac), b(bc);
    if (a.degree() < 1 || b.degree() < 1) continue;
    Rational exact = resultant(a, b);
    Complex approx = resultant(to_cpoly(a), to_cpoly(b));
    double expect = to_double(exact);
    CHECK(std::abs(approx - Complex(expect, 0)) <= 1e-7 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("resultant multiplies over products") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto rand_poly = [&](int d) {
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = Rational(coeff(rng));
    return RatPoly(c);
  };
  for (int trial = 0; trial < 60; ++trial) {
    RatPoly a = rand_poly(2), b = rand_poly(2), c = rand_poly(3);
    if (a.degree() != 2 || b.degree() != 2 || c.degree() != 3) continue;
    CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
  }
}

}  // TEST_SUITE
