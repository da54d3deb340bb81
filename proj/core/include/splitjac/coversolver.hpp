#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "splitjac/igusa.hpp"
#include "splitjac/poly.hpp"
#include "splitjac/ramification.hpp"

namespace splitjac {

// One solution of the degree-n cover system
//
//   phi(x) = lambda * x * (x - w4) * P(x)^2 / ((x - w6) * Q(x)^2),
//
// normalized so that the fibers over 0, 1 and infinity each carry two
// unramified points: {0, w4}, {1, w5} and {w6, infinity} respectively.
// s is the branch value whose fiber is all double points, t the one with a
// single double point.
struct CoverInstance {
  int n = 0;
  Complex lambda;      // leading coefficient, nonzero
  Complex w4, w5, w6;  // finite Weierstrass places besides 0 and 1
  CPoly P, Q, R;       // monic of degree (n-2)/2, pairwise coprime, squarefree
  Complex s, t;
  double residual = 0;  // sup norm of the stacked residual map
};

// Unknown layout and residual shape for a fixed even degree n >= 4.
// Each polynomial slot stores its non-leading coefficients low-to-high; the
// leading coefficient is pinned to 1.
struct CoverSystem {
  int n = 0;
  int d = 0;  // deg P = deg Q = deg R = (n-2)/2
  int off_p = 0, off_q = 0, off_r = 0;
  int off_w4 = 0, off_w5 = 0, off_w6 = 0;
  int off_lambda = 0, off_s = 0, off_t = 0;
  int off_sfib = 0;  // S: monic of degree n/2, the s-fiber is S = 0 doubled
  int off_rho = 0;   // double point of the t-fiber
  int off_u = 0;     // U: monic of degree n-2, simple part of the t-fiber
  int num_unknowns = 0;   // 3n + 2
  int num_equations = 0;  // 3(n+1); the three top-degree rows vanish identically
};

// Stacks three coefficient blocks of degree n each:
//   (a) lambda x(x-w4)P^2 - (x-w6)Q^2 - lambda (x-1)(x-w5)R^2   == 0
//   (b) lambda x(x-w4)P^2 - s(x-w6)Q^2 - lambda S^2             == 0
//   (c) lambda x(x-w4)P^2 - t(x-w6)Q^2 - lambda (x-rho)^2 U     == 0
// Throws std::domain_error unless n is even and >= 4.
CoverSystem build_system(int n);

struct SolveOptions {
  std::uint64_t rng_seed = 42;
  int threads = 1;
  int max_iterations = 250;
};

struct SolveDiagnostics {
  int seeds_run = 0;
  int converged = 0;          // residual under tolerance before any filtering
  int rejected_structure = 0; // coprimality / squarefreeness / collision filters
  int rejected_verification = 0;
  int duplicates_merged = 0;
  std::vector<std::string> rejection_reasons;  // seed-tagged, deterministic order
};

// Multi-start complex Levenberg-Marquardt from unit-disk random initial
// points. Returns only instances that pass the structure filters and the
// independent verify_cover route, deduplicated (s <-> t relabeling counts as
// equal) and ordered by residual then lexicographic coordinates. Output is
// byte-stable for a fixed rng seed regardless of thread count.
std::vector<CoverInstance> solve(const CoverSystem& system, int seeds, double tolerance,
                                 const SolveOptions& options = {},
                                 SolveDiagnostics* diagnostics = nullptr);

// Independent check that never reuses the solver's residual blocks: the
// critical points are recovered as roots of N'D - ND', clustered (relative
// tolerance 1e-6), and their values matched against {0, 1, infinity, s, t}.
struct VerificationReport {
  bool verified = false;
  std::vector<std::string> issues;  // empty iff verified
  RamificationProfile profile;      // fibers over 0, 1, infinity, s, t in that order
  ValidationReport profile_report;
  std::array<int, 4> parity{};  // Weierstrass images over 0, 1, infinity, s
  bool parity_ok = false;
  double max_cluster_spread = 0;     // worst within-cluster diameter seen
  double min_cluster_separation = 0; // closest approach of distinct cluster centers
};

VerificationReport verify_cover(const CoverInstance& c);

// y^2 = x(x-1)(x-w4)(x-w5)(x-w6) for a verified instance, with its Igusa
// vector. Throws std::domain_error if verification fails or two of the five
// roots come within 1e-8 of each other.
struct EmittedCurve {
  CPoly curve;  // the monic quintic above
  IgusaVectorC invariants;
};

EmittedCurve emit_curve(const CoverInstance& c);

namespace detail {

// Residual map and its holomorphic Jacobian at an unknown vector, exposed so
// tests can cross-check the Jacobian against finite differences. The Jacobian
// is returned column-major: jac[j][i] = d residual_i / d z_j.
std::vector<Complex> cover_residual(const CoverSystem& sys, const std::vector<Complex>& z);
std::vector<std::vector<Complex>> cover_jacobian(const CoverSystem& sys,
                                                 const std::vector<Complex>& z);

}  // namespace detail

}  // namespace splitjac
