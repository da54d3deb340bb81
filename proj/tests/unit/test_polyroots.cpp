#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "splitjac/polyroots.hpp"

using namespace splitjac;

namespace {

CPoly from_roots(const std::vector<Complex>& roots) {
  CPoly p = CPoly::constant(Complex(1.0, 0.0));
  for (const auto& r : roots) p = p * CPoly({-r, Complex(1.0, 0.0)});
  return p;
}

}  // namespace

TEST_SUITE("polyroots") {

TEST_CASE("quadratic with known roots") {
  // (x - 2)(x + 3) = x^2 + x - 6
  CPoly p({Complex(-6, 0), Complex(1, 0), Complex(1, 0)});
  auto roots = poly_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - Complex(-3, 0)) < 1e-12);
  CHECK(std::abs(roots[1] - Complex(2, 0)) < 1e-12);
}

TEST_CASE("roots of unity come back on the circle") {
  for (int n : {3, 5, 8}) {
    std::vector<Complex> cs(static_cast<size_t>(n) + 1, Complex(0, 0));
    cs[0] = Complex(-1, 0);
    cs[static_cast<size_t>(n)] = Complex(1, 0);
    auto roots = poly_roots(CPoly(cs));
    REQUIRE(static_cast<int>(roots.size()) == n);
    for (const auto& r : roots) CHECK(std::abs(std::abs(r) - 1.0) < 1e-12);
    // x = 1 is always among them
    double best = 1e9;
    for (const auto& r : roots) best = std::min(best, std::abs(r - Complex(1, 0)));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("output is sorted by (re, im)") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> want;
    for (int k = 0; k < 6; ++k) want.emplace_back(u(rng), u(rng));
    auto roots = poly_roots(from_roots(want));
    auto sorted = roots;
    std::sort(sorted.begin(), sorted.end(), [](const Complex& a, const Complex& b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    CHECK(roots == sorted);
  }
}

TEST_CASE("polished roots reproduce well-separated targets") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> grid(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    // distinct lattice roots keep the problem well conditioned
    std::vector<Complex> want;
    while (want.size() < 5) {
      Complex c(grid(rng), grid(rng));
      bool fresh = true;
      for (const auto& w : want)
        if (std::abs(w - c) < 0.5) fresh = false;
      if (fresh) want.push_back(c);
    }
    auto roots = poly_roots(from_roots(want));
    REQUIRE(roots.size() == want.size());
    for (const auto& w : want) {
      double best = 1e9;
      for (const auto& r : roots) best = std::min(best, std::abs(r - w));
      CHECK(best < 1e-9);
    }
  }
}

TEST_CASE("double root appears as a close pair") {
  // (x - 1)^2 (x + 2)
  auto p = from_roots({Complex(1, 0), Complex(1, 0), Complex(-2, 0)});
  auto roots = poly_roots(p);
  REQUIRE(roots.size() == 3);
  int near_one = 0;
  for (const auto& r : roots)
    if (std::abs(r - Complex(1, 0)) < 1e-6) ++near_one;
  CHECK(near_one == 2);
}

TEST_CASE("degree below one is rejected") {
  CHECK_THROWS_AS(poly_roots(CPoly::constant(Complex(3, 0))), std::domain_error);
  CHECK_THROWS_AS(poly_roots(CPoly{}), std::domain_error);
}

}  // TEST_SUITE
