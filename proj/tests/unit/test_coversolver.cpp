#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "splitjac/coversolver.hpp"

using namespace splitjac;

namespace {

std::vector<Complex> random_point(std::mt19937& rng, int dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> z(static_cast<size_t>(dim));
  for (auto& c : z) c = Complex(u(rng), u(rng));
  return z;
}

}  // namespace

TEST_SUITE("coversolver") {

TEST_CASE("unknown layout for the base degree") {
  auto sys = build_system(4);
  CHECK(sys.n == 4);
  CHECK(sys.d == 1);
  CHECK(sys.num_unknowns == 14);
  CHECK(sys.num_equations == 15);
  // offsets partition [0, num_unknowns)
  std::vector<int> offs = {sys.off_p,      sys.off_q, sys.off_r, sys.off_w4,
                           sys.off_w5,     sys.off_w6, sys.off_lambda, sys.off_s,
                           sys.off_t,      sys.off_sfib, sys.off_rho, sys.off_u};
  for (int o : offs) {
    CHECK(o >= 0);
    CHECK(o < sys.num_unknowns);
  }
  std::sort(offs.begin(), offs.end());
  CHECK(std::adjacent_find(offs.begin(), offs.end()) == offs.end());
}

TEST_CASE("unknown counts scale as 3n + 2") {
  for (int n : {4, 6, 8, 10}) {
    auto sys = build_system(n);
    CHECK(sys.d == (n - 2) / 2);
    CHECK(sys.num_unknowns == 3 * n + 2);
    CHECK(sys.num_equations == 3 * (n + 1));
  }
}

TEST_CASE("odd or tiny degrees are rejected") {
  CHECK_THROWS_AS(build_system(5), std::domain_error);
  CHECK_THROWS_AS(build_system(7), std::domain_error);
  CHECK_THROWS_AS(build_system(2), std::domain_error);
  CHECK_THROWS_AS(build_system(0), std::domain_error);
}

TEST_CASE("analytic jacobian matches forward differences") {
  std::mt19937 rng(1234);
  for (int n : {4, 6}) {
    auto sys = build_system(n);
    for (int trial = 0; trial < 5; ++trial) {
      auto z = random_point(rng, sys.num_unknowns);
      auto jac = detail::cover_jacobian(sys, z);
      auto r0 = detail::cover_residual(sys, z);
      const double h = 1e-7;
      double worst = 0;
      for (int j = 0; j < sys.num_unknowns; ++j) {
        auto zh = z;
        zh[static_cast<size_t>(j)] += Complex(h, 0);
        auto r1 = detail::cover_residual(sys, zh);
        for (size_t i = 0; i < r0.size(); ++i) {
          Complex fd = (r1[i] - r0[i]) / h;
          worst = std::max(worst, std::abs(fd - jac[static_cast<size_t>(j)][i]));
        }
      }
      CHECK(worst < 1e-5);
    }
  }
}

TEST_CASE("residual vanishes on a verified solution") {
  auto sys = build_system(4);
  auto sols = solve(sys, 120, 1e-10, SolveOptions{7, 2, 250});
  REQUIRE(!sols.empty());
  for (const auto& c : sols) {
    CHECK(c.residual < 1e-10);
    CHECK(c.n == 4);
    CHECK(c.P.degree() == 1);
    CHECK(std::abs(c.P.lc() - Complex(1, 0)) == 0);  // monic by construction
  }
}

TEST_CASE("verification reproduces the expected ramification data") {
  auto sys = build_system(4);
  auto sols = solve(sys, 120, 1e-10, SolveOptions{7, 2, 250});
  REQUIRE(!sols.empty());
  for (const auto& c : sols) {
    auto rep = verify_cover(c);
    CHECK(rep.verified);
    CHECK(rep.issues.empty());
    CHECK(rep.parity_ok);
    CHECK(rep.parity == std::array<int, 4>{2, 2, 2, 0});
    CHECK(rep.profile_report.rh_ok);
    CHECK(rep.profile_report.rh_sum == 2 * 4 - 2);
    // ramified parts only: one double point over 0, 1, infinity and t,
    // two over the all-double branch value s
    REQUIRE(rep.profile.fibers.size() == 5);
    for (int k : {0, 1, 2, 4})
      CHECK(rep.profile.fibers[static_cast<size_t>(k)] == std::vector<int>{2});
    CHECK(rep.profile.fibers[3] == std::vector<int>{2, 2});
    CHECK(rep.max_cluster_spread < 1e-6);
  }
}

TEST_CASE("perturbed solutions fail verification") {
  auto sys = build_system(4);
  auto sols = solve(sys, 120, 1e-10, SolveOptions{7, 2, 250});
  REQUIRE(!sols.empty());
  CoverInstance broken = sols.front();
  std::vector<Complex> cs = broken.P.coeffs();
  cs[0] += Complex(1e-3, 0);
  broken.P = CPoly(cs);
  auto rep = verify_cover(broken);
  CHECK_FALSE(rep.verified);
  CHECK(!rep.issues.empty());
}

TEST_CASE("duplicate orbits under s-t relabeling are merged") {
  auto sys = build_system(4);
  SolveDiagnostics diag;
  auto sols = solve(sys, 200, 1e-10, SolveOptions{3, 2, 250}, &diag);
  CHECK(diag.seeds_run == 200);
  CHECK(diag.converged >= static_cast<int>(sols.size()));
  // every survivor is distinct even after swapping the two special branch values
  for (size_t i = 0; i < sols.size(); ++i)
    for (size_t j = i + 1; j < sols.size(); ++j) {
      bool same = std::abs(sols[i].s - sols[j].s) < 1e-6 &&
                  std::abs(sols[i].t - sols[j].t) < 1e-6;
      bool swapped = std::abs(sols[i].s - sols[j].t) < 1e-6 &&
                     std::abs(sols[i].t - sols[j].s) < 1e-6;
      bool coincide = std::abs(sols[i].w4 - sols[j].w4) < 1e-6 &&
                      std::abs(sols[i].w5 - sols[j].w5) < 1e-6 &&
                      std::abs(sols[i].w6 - sols[j].w6) < 1e-6;
      const bool duplicate = (same || swapped) && coincide;
      CHECK_FALSE(duplicate);
    }
}

TEST_CASE("rejection reasons are seed-tagged and deterministic") {
  auto sys = build_system(4);
  SolveDiagnostics a, b;
  solve(sys, 80, 1e-10, SolveOptions{5, 1, 250}, &a);
  solve(sys, 80, 1e-10, SolveOptions{5, 4, 250}, &b);
  CHECK(a.rejection_reasons == b.rejection_reasons);
  for (const auto& reason : a.rejection_reasons)
    CHECK(reason.find("seed") != std::string::npos);
}

TEST_CASE("solver output is identical across thread counts") {
  auto sys = build_system(4);
  auto one = solve(sys, 150, 1e-10, SolveOptions{9, 1, 250});
  auto four = solve(sys, 150, 1e-10, SolveOptions{9, 4, 250});
  auto eight = solve(sys, 150, 1e-10, SolveOptions{9, 8, 250});
  REQUIRE(one.size() == four.size());
  REQUIRE(one.size() == eight.size());
  for (size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].lambda == four[i].lambda);
    CHECK(one[i].s == four[i].s);
    CHECK(one[i].t == four[i].t);
    CHECK(one[i].lambda == eight[i].lambda);
    CHECK(one[i].P.coeffs() == eight[i].P.coeffs());
    CHECK(one[i].Q.coeffs() == eight[i].Q.coeffs());
  }
}

TEST_CASE("emitted curves are smooth quintics with finite invariants") {
  auto sys = build_system(4);
  auto sols = solve(sys, 120, 1e-10, SolveOptions{7, 2, 250});
  REQUIRE(!sols.empty());
  auto em = emit_curve(sols.front());
  CHECK(em.curve.degree() == 5);
  CHECK(std::abs(em.curve.lc() - Complex(1, 0)) < 1e-12);
  CHECK(std::isfinite(em.invariants.J10.real()));
  CHECK(std::abs(em.invariants.J10) > 0);
}

}  // TEST_SUITE
