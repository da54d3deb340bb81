#include "splitjac/coversolver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "splitjac/polyroots.hpp"

namespace splitjac {

namespace {

struct Decoded {
  CPoly P, Q, R, S, U;
  Complex w4, w5, w6, lambda, s, t, rho;
};

CPoly monic_slice(const std::vector<Complex>& z, int off, int deg) {
  std::vector<Complex> c(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(off + i)];
  c[static_cast<std::size_t>(deg)] = Complex(1);
  return CPoly(c);
}

Decoded decode(const CoverSystem& sys, const std::vector<Complex>& z) {
  Decoded u;
  u.P = monic_slice(z, sys.off_p, sys.d);
  u.Q = monic_slice(z, sys.off_q, sys.d);
  u.R = monic_slice(z, sys.off_r, sys.d);
  u.S = monic_slice(z, sys.off_sfib, sys.n / 2);
  u.U = monic_slice(z, sys.off_u, sys.n - 2);
  u.w4 = z[static_cast<std::size_t>(sys.off_w4)];
  u.w5 = z[static_cast<std::size_t>(sys.off_w5)];
  u.w6 = z[static_cast<std::size_t>(sys.off_w6)];
  u.lambda = z[static_cast<std::size_t>(sys.off_lambda)];
  u.s = z[static_cast<std::size_t>(sys.off_s)];
  u.t = z[static_cast<std::size_t>(sys.off_t)];
  u.rho = z[static_cast<std::size_t>(sys.off_rho)];
  return u;
}

std::string fmt(const Complex& v) {
  std::ostringstream os;
  os << std::setprecision(6) << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
  return os.str();
}

double rel_dist(const Complex& a, const Complex& b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<Complex> roots_or_empty(const CPoly& p) {
  if (p.degree() < 1) return {};
  return poly_roots(p);
}

}  // namespace

CoverSystem build_system(int n) {
  if (n < 4 || n % 2 != 0) throw std::domain_error("cover system requires an even degree n >= 4");
  CoverSystem sys;
  sys.n = n;
  sys.d = (n - 2) / 2;
  int at = 0;
  sys.off_p = at; at += sys.d;
  sys.off_q = at; at += sys.d;
  sys.off_r = at; at += sys.d;
  sys.off_w4 = at++;
  sys.off_w5 = at++;
  sys.off_w6 = at++;
  sys.off_lambda = at++;
  sys.off_s = at++;
  sys.off_t = at++;
  sys.off_sfib = at; at += n / 2;
  sys.off_rho = at++;
  sys.off_u = at; at += n - 2;
  sys.num_unknowns = at;
  sys.num_equations = 3 * (n + 1);
  return sys;
}

namespace detail {

std::vector<Complex> cover_residual(const CoverSystem& sys, const std::vector<Complex>& z) {
  const Decoded u = decode(sys, z);
  const int n = sys.n;
  const CPoly X = CPoly::identity_x();
  const CPoly T1 = u.lambda * (X * linear_root(u.w4) * (u.P * u.P));
  const CPoly DQ = linear_root(u.w6) * (u.Q * u.Q);
  const CPoly A = T1 - DQ - u.lambda * (linear_root(Complex(1)) * linear_root(u.w5) * (u.R * u.R));
  const CPoly B = T1 - u.s * DQ - u.lambda * (u.S * u.S);
  const CPoly C = T1 - u.t * DQ - u.lambda * (linear_root(u.rho) * linear_root(u.rho) * u.U);
  std::vector<Complex> F(static_cast<std::size_t>(sys.num_equations));
  for (int k = 0; k <= n; ++k) {
    F[static_cast<std::size_t>(k)] = A.coeff(k);
    F[static_cast<std::size_t>(n + 1 + k)] = B.coeff(k);
    F[static_cast<std::size_t>(2 * (n + 1) + k)] = C.coeff(k);
  }
  return F;
}

std::vector<std::vector<Complex>> cover_jacobian(const CoverSystem& sys,
                                                 const std::vector<Complex>& z) {
  const Decoded u = decode(sys, z);
  const int n = sys.n;
  const int rows_per_block = n + 1;
  const CPoly X = CPoly::identity_x();
  const CPoly M4 = X * linear_root(u.w4);
  const CPoly M6 = linear_root(u.w6);
  const CPoly L5 = linear_root(Complex(1)) * linear_root(u.w5);
  const CPoly P2 = u.P * u.P, Q2 = u.Q * u.Q, R2 = u.R * u.R;
  const CPoly Rho1 = linear_root(u.rho);
  const CPoly Rho2 = Rho1 * Rho1;

  std::vector<std::vector<Complex>> jac(
      static_cast<std::size_t>(sys.num_unknowns),
      std::vector<Complex>(static_cast<std::size_t>(sys.num_equations)));

  // Adds base * x^shift into one block of a column.
  auto add = [&](int col, int block, const CPoly& base, int shift) {
    for (int j = 0; j <= base.degree(); ++j) {
      const int row = block * rows_per_block + j + shift;
      jac[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] += base.coeff(j);
    }
  };

  const CPoly dP = u.lambda * (M4 * (Complex(2) * u.P));   // times x^k per coefficient
  const CPoly dQ = Complex(-1) * (M6 * (Complex(2) * u.Q));
  const CPoly dR = -u.lambda * (L5 * (Complex(2) * u.R));
  for (int k = 0; k < sys.d; ++k) {
    add(sys.off_p + k, 0, dP, k);
    add(sys.off_p + k, 1, dP, k);
    add(sys.off_p + k, 2, dP, k);
    add(sys.off_q + k, 0, dQ, k);
    add(sys.off_q + k, 1, u.s * dQ, k);
    add(sys.off_q + k, 2, u.t * dQ, k);
    add(sys.off_r + k, 0, dR, k);
  }

  const CPoly dW4 = -u.lambda * (X * P2);  // d/dw4 of lambda x(x-w4)P^2
  add(sys.off_w4, 0, dW4, 0);
  add(sys.off_w4, 1, dW4, 0);
  add(sys.off_w4, 2, dW4, 0);

  add(sys.off_w5, 0, u.lambda * (linear_root(Complex(1)) * R2), 0);

  add(sys.off_w6, 0, Q2, 0);
  add(sys.off_w6, 1, u.s * Q2, 0);
  add(sys.off_w6, 2, u.t * Q2, 0);

  add(sys.off_lambda, 0, M4 * P2 - L5 * R2, 0);
  add(sys.off_lambda, 1, M4 * P2 - u.S * u.S, 0);
  add(sys.off_lambda, 2, M4 * P2 - Rho2 * u.U, 0);

  add(sys.off_s, 1, Complex(-1) * (M6 * Q2), 0);
  add(sys.off_t, 2, Complex(-1) * (M6 * Q2), 0);

  const CPoly dS = -u.lambda * (Complex(2) * u.S);
  for (int k = 0; k < n / 2; ++k) add(sys.off_sfib + k, 1, dS, k);

  add(sys.off_rho, 2, Complex(2) * u.lambda * (Rho1 * u.U), 0);

  const CPoly dU = -u.lambda * Rho2;
  for (int k = 0; k < n - 2; ++k) add(sys.off_u + k, 2, dU, k);

  return jac;
}

}  // namespace detail

namespace {

struct LmOutcome {
  std::vector<Complex> z;
  double sup = 0;
  bool converged = false;
};

LmOutcome run_lm(const CoverSystem& sys, std::vector<Complex> z, double tolerance,
                 int max_iterations) {
  const int m = sys.num_equations;
  const int nu = sys.num_unknowns;
  auto to_eigen = [](const std::vector<Complex>& v) {
    Eigen::VectorXcd e(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) e(static_cast<Eigen::Index>(i)) = v[i];
    return e;
  };
  const double target = std::max(tolerance * 1e-3, 1e-14);

  Eigen::VectorXcd F = to_eigen(detail::cover_residual(sys, z));
  double f2 = F.squaredNorm();
  double mu = 1e-3;
  for (int iter = 0; iter < max_iterations; ++iter) {
    if (F.lpNorm<Eigen::Infinity>() < target) break;
    const auto cols = detail::cover_jacobian(sys, z);
    Eigen::MatrixXcd J(m, nu);
    for (int c = 0; c < nu; ++c)
      for (int r = 0; r < m; ++r)
        J(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    const Eigen::MatrixXcd JhJ = J.adjoint() * J;
    const Eigen::VectorXcd g = J.adjoint() * F;
    bool stepped = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::MatrixXcd Amat = JhJ;
      for (int i = 0; i < nu; ++i) Amat(i, i) += mu;
      const Eigen::VectorXcd delta = Amat.ldlt().solve(-g);
      std::vector<Complex> z2 = z;
      for (int i = 0; i < nu; ++i) z2[static_cast<std::size_t>(i)] += delta(i);
      const Eigen::VectorXcd F2 = to_eigen(detail::cover_residual(sys, z2));
      const double f22 = F2.squaredNorm();
      if (f22 < f2) {
        z = std::move(z2);
        F = F2;
        f2 = f22;
        mu = std::max(mu / 3.0, 1e-12);
        stepped = true;
        break;
      }
      mu *= 4.0;
      if (mu > 1e10) break;
    }
    if (!stepped) break;
  }
  const double sup = F.lpNorm<Eigen::Infinity>();
  return {std::move(z), sup, sup < tolerance};
}

std::vector<Complex> random_start(const CoverSystem& sys, std::uint64_t rng_seed,
                                  int seed_index) {
  std::seed_seq seq{static_cast<unsigned>(rng_seed & 0xffffffffu),
                    static_cast<unsigned>(rng_seed >> 32),
                    static_cast<unsigned>(seed_index)};
  std::mt19937_64 gen(seq);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto disk = [&]() {
    double re, im;
    do {
      re = uni(gen);
      im = uni(gen);
    } while (re * re + im * im > 1.0);
    return Complex(re, im);
  };
  std::vector<Complex> z(static_cast<std::size_t>(sys.num_unknowns));
  for (auto& v : z) v = disk();
  return z;
}

CoverInstance decode_instance(const CoverSystem& sys, const std::vector<Complex>& z,
                              double residual) {
  const Decoded u = decode(sys, z);
  CoverInstance inst;
  inst.n = sys.n;
  inst.lambda = u.lambda;
  inst.w4 = u.w4;
  inst.w5 = u.w5;
  inst.w6 = u.w6;
  inst.P = u.P;
  inst.Q = u.Q;
  inst.R = u.R;
  inst.s = u.s;
  inst.t = u.t;
  inst.residual = residual;
  return inst;
}

// Empty string when the instance is structurally clean.
std::string structure_violation(const CoverInstance& inst) {
  if (std::abs(inst.lambda) < 1e-8) return "leading coefficient lambda collapses to 0";

  const std::array<std::pair<const char*, Complex>, 5> wpts = {{{"0", Complex(0)},
                                                                {"1", Complex(1)},
                                                                {"w4", inst.w4},
                                                                {"w5", inst.w5},
                                                                {"w6", inst.w6}}};
  for (std::size_t i = 0; i < wpts.size(); ++i)
    for (std::size_t j = i + 1; j < wpts.size(); ++j)
      if (rel_dist(wpts[i].second, wpts[j].second) < 1e-8)
        return std::string("Weierstrass places ") + wpts[i].first + " and " + wpts[j].first +
               " collide";

  const std::array<std::pair<const char*, Complex>, 2> extras = {{{"s", inst.s},
                                                                  {"t", inst.t}}};
  for (const auto& [name, v] : extras) {
    if (rel_dist(v, Complex(0)) < 1e-8 || rel_dist(v, Complex(1)) < 1e-8)
      return std::string("branch value ") + name + " collides with 0 or 1";
  }
  if (rel_dist(inst.s, inst.t) < 1e-8) return "branch values s and t collide";

  struct Labeled {
    const char* name;
    std::vector<Complex> roots;
  };
  std::array<Labeled, 3> fac = {{{"P", roots_or_empty(inst.P)},
                                 {"Q", roots_or_empty(inst.Q)},
                                 {"R", roots_or_empty(inst.R)}}};
  for (const auto& f : fac) {
    for (std::size_t i = 0; i < f.roots.size(); ++i)
      for (std::size_t j = i + 1; j < f.roots.size(); ++j)
        if (rel_dist(f.roots[i], f.roots[j]) < 1e-6)
          return std::string(f.name) + " has a repeated root";
  }
  for (std::size_t a = 0; a < fac.size(); ++a)
    for (std::size_t b = a + 1; b < fac.size(); ++b)
      for (const auto& ra : fac[a].roots)
        for (const auto& rb : fac[b].roots)
          if (rel_dist(ra, rb) < 1e-6)
            return std::string(fac[a].name) + " and " + fac[b].name + " share a root";
  for (const auto& f : fac)
    for (const auto& r : f.roots)
      for (const auto& [wname, wv] : wpts)
        if (rel_dist(r, wv) < 1e-6)
          return std::string("a root of ") + f.name + " collides with Weierstrass place " + wname;
  return {};
}

bool near_duplicate(const CoverInstance& a, const CoverInstance& b) {
  auto close = [](const Complex& x, const Complex& y) { return rel_dist(x, y) < 1e-6; };
  auto poly_close = [&](const CPoly& p, const CPoly& q) {
    if (p.degree() != q.degree()) return false;
    for (int k = 0; k <= p.degree(); ++k)
      if (!close(p.coeff(k), q.coeff(k))) return false;
    return true;
  };
  const bool shared = close(a.lambda, b.lambda) && close(a.w4, b.w4) && close(a.w5, b.w5) &&
                      close(a.w6, b.w6) && poly_close(a.P, b.P) && poly_close(a.Q, b.Q) &&
                      poly_close(a.R, b.R);
  if (!shared) return false;
  if (close(a.s, b.s) && close(a.t, b.t)) return true;
  return close(a.s, b.t) && close(a.t, b.s);  // s <-> t relabeling
}

bool lex_before(const CoverInstance& a, const CoverInstance& b) {
  auto cmp = [](const Complex& x, const Complex& y) -> int {
    if (x.real() != y.real()) return x.real() < y.real() ? -1 : 1;
    if (x.imag() != y.imag()) return x.imag() < y.imag() ? -1 : 1;
    return 0;
  };
  std::vector<Complex> ka = {a.lambda, a.w4, a.w5, a.w6, a.s, a.t};
  std::vector<Complex> kb = {b.lambda, b.w4, b.w5, b.w6, b.s, b.t};
  auto push_poly = [](std::vector<Complex>& key, const CPoly& p) {
    for (int k = 0; k <= p.degree(); ++k) key.push_back(p.coeff(k));
  };
  push_poly(ka, a.P); push_poly(ka, a.Q); push_poly(ka, a.R);
  push_poly(kb, b.P); push_poly(kb, b.Q); push_poly(kb, b.R);
  for (std::size_t i = 0; i < std::min(ka.size(), kb.size()); ++i) {
    const int c = cmp(ka[i], kb[i]);
    if (c != 0) return c < 0;
  }
  return ka.size() < kb.size();
}

}  // namespace

std::vector<CoverInstance> solve(const CoverSystem& system, int seeds, double tolerance,
                                 const SolveOptions& options, SolveDiagnostics* diagnostics) {
  if (seeds < 0) throw std::invalid_argument("seed count must be nonnegative");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  const int threads = std::max(1, options.threads);

  struct SeedOutcome {
    bool converged = false;
    double sup = 0;
    CoverInstance inst;
  };
  std::vector<SeedOutcome> outcomes(static_cast<std::size_t>(seeds));
  auto work = [&](int start) {
    for (int i = start; i < seeds; i += threads) {
      auto z0 = random_start(system, options.rng_seed, i);
      auto lm = run_lm(system, std::move(z0), tolerance, options.max_iterations);
      auto& slot = outcomes[static_cast<std::size_t>(i)];
      slot.sup = lm.sup;
      if (lm.converged) {
        slot.converged = true;
        slot.inst = decode_instance(system, lm.z, lm.sup);
      }
    }
  };
  if (threads == 1 || seeds <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int tid = 0; tid < threads; ++tid) pool.emplace_back(work, tid);
    for (auto& th : pool) th.join();
  }

  SolveDiagnostics diag;
  diag.seeds_run = seeds;
  std::vector<CoverInstance> accepted;
  for (int i = 0; i < seeds; ++i) {
    const auto& slot = outcomes[static_cast<std::size_t>(i)];
    if (!slot.converged) continue;
    ++diag.converged;
    const std::string why = structure_violation(slot.inst);
    if (!why.empty()) {
      ++diag.rejected_structure;
      diag.rejection_reasons.push_back("seed " + std::to_string(i) + ": " + why);
      continue;
    }
    const VerificationReport rep = verify_cover(slot.inst);
    if (!rep.verified) {
      ++diag.rejected_verification;
      diag.rejection_reasons.push_back(
          "seed " + std::to_string(i) + ": " +
          (rep.issues.empty() ? std::string("verification failed") : rep.issues.front()));
      continue;
    }
    accepted.push_back(slot.inst);
  }

  std::sort(accepted.begin(), accepted.end(), [](const CoverInstance& a, const CoverInstance& b) {
    if (a.residual != b.residual) return a.residual < b.residual;
    return lex_before(a, b);
  });
  std::vector<CoverInstance> unique;
  for (const auto& inst : accepted) {
    bool dup = false;
    for (const auto& kept : unique)
      if (near_duplicate(kept, inst)) {
        dup = true;
        break;
      }
    if (dup)
      ++diag.duplicates_merged;
    else
      unique.push_back(inst);
  }
  if (diagnostics != nullptr) *diagnostics = diag;
  return unique;
}

namespace {

// phi evaluated at a point, with nullopt standing for infinity.
std::optional<Complex> phi_value(const CPoly& N, const CPoly& D, const Complex& x) {
  const Complex nv = N.eval(x);
  const Complex dv = D.eval(x);
  if (std::abs(dv) <= 1e-8 * std::max(1.0, std::abs(nv))) return std::nullopt;
  return nv / dv;
}

}  // namespace

VerificationReport verify_cover(const CoverInstance& c) {
  VerificationReport rep;
  const int n = c.n;
  if (n < 4 || n % 2 != 0) {
    rep.issues.push_back("degree must be even and at least 4");
    return rep;
  }
  if (std::abs(c.lambda) < 1e-12) {
    rep.issues.push_back("lambda vanishes, the map degenerates");
    return rep;
  }
  const CPoly X = CPoly::identity_x();
  const CPoly N = c.lambda * (X * linear_root(c.w4) * (c.P * c.P));
  const CPoly D = linear_root(c.w6) * (c.Q * c.Q);
  if (N.degree() != n || D.degree() != n - 1) {
    rep.issues.push_back("numerator or denominator degree collapsed");
    return rep;
  }

  const CPoly W = N.derivative() * D - N * D.derivative();
  if (W.degree() != 2 * n - 2) {
    rep.issues.push_back("critical divisor has unexpected degree");
    return rep;
  }
  std::vector<Complex> crit;
  try {
    crit = poly_roots(W);
  } catch (const std::exception& e) {
    rep.issues.push_back(std::string("critical point recovery failed: ") + e.what());
    return rep;
  }

  // Greedy union of critical points within the relative cluster tolerance.
  const std::size_t k = crit.size();
  std::vector<std::size_t> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (rel_dist(crit[i], crit[j]) < 1e-6) parent[find(i)] = find(j);

  struct Cluster {
    Complex center;
    int size = 0;
    double spread = 0;
  };
  std::vector<Cluster> clusters;
  for (std::size_t i = 0; i < k; ++i) {
    if (find(i) != i) continue;
    Cluster cl;
    Complex sum(0);
    for (std::size_t j = 0; j < k; ++j)
      if (find(j) == i) {
        sum += crit[j];
        ++cl.size;
      }
    cl.center = sum / Complex(static_cast<double>(cl.size));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (find(a) == i && find(b) == i)
          cl.spread = std::max(cl.spread, std::abs(crit[a] - crit[b]));
    clusters.push_back(cl);
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  for (const auto& cl : clusters) rep.max_cluster_spread = std::max(rep.max_cluster_spread, cl.spread);
  rep.min_cluster_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (std::size_t j = i + 1; j < clusters.size(); ++j)
      rep.min_cluster_separation =
          std::min(rep.min_cluster_separation, std::abs(clusters[i].center - clusters[j].center));
  if (!std::isfinite(rep.min_cluster_separation)) rep.min_cluster_separation = 0;

  // Branch order: 0, 1, infinity, s, t.
  std::array<std::vector<int>, 5> fibers;
  const std::array<std::optional<Complex>, 5> targets = {Complex(0), Complex(1), std::nullopt,
                                                         c.s, c.t};
  for (const auto& cl : clusters) {
    const int e = cl.size + 1;
    const std::optional<Complex> v = phi_value(N, D, cl.center);
    int slot = -1;
    if (!v.has_value()) {
      slot = 2;
    } else {
      for (int b = 0; b < 5; ++b) {
        if (b == 2) continue;
        if (rel_dist(*v, *targets[static_cast<std::size_t>(b)]) < 1e-6) {
          slot = b;
          break;
        }
      }
    }
    if (slot < 0) {
      rep.issues.push_back("critical value " + fmt(*v) + " matches no expected branch value");
      continue;
    }
    fibers[static_cast<std::size_t>(slot)].push_back(e);
  }
  for (auto& f : fibers) std::sort(f.begin(), f.end(), std::greater<int>());
  rep.profile.degree = n;
  rep.profile.fibers.assign(fibers.begin(), fibers.end());
  rep.profile_report = validate_profile(rep.profile);
  if (!rep.profile_report.consistent)
    rep.issues.push_back("recovered ramification profile fails validation");

  const std::vector<int> half(static_cast<std::size_t>((n - 2) / 2), 2);
  const std::vector<int> full(static_cast<std::size_t>(n / 2), 2);
  const std::vector<int> single(1, 2);
  const std::array<const std::vector<int>*, 5> expect = {&half, &half, &half, &full, &single};
  for (int b = 0; b < 5; ++b)
    if (fibers[static_cast<std::size_t>(b)] != *expect[static_cast<std::size_t>(b)]) {
      rep.issues.push_back("fiber " + std::to_string(b) + " does not have the generic shape");
      break;
    }

  // Weierstrass images: {0, w4} -> 0, {1, w5} -> 1, {w6, infinity} -> infinity.
  struct Wpt {
    const char* name;
    std::optional<Complex> image;
  };
  std::array<Wpt, 6> wimg = {{{"0", phi_value(N, D, Complex(0))},
                              {"w4", phi_value(N, D, c.w4)},
                              {"1", phi_value(N, D, Complex(1))},
                              {"w5", phi_value(N, D, c.w5)},
                              {"w6", phi_value(N, D, c.w6)},
                              {"infinity", std::nullopt}}};
  rep.parity = {0, 0, 0, 0};
  for (const auto& wp : wimg) {
    int slot = -1;
    if (!wp.image.has_value()) {
      slot = 2;
    } else {
      for (int b = 0; b < 5; ++b) {
        if (b == 2) continue;
        if (rel_dist(*wp.image, *targets[static_cast<std::size_t>(b)]) < 1e-6) {
          slot = b;
          break;
        }
      }
    }
    if (slot < 0) {
      rep.issues.push_back(std::string("Weierstrass place ") + wp.name +
                           " maps to no expected branch value");
    } else if (slot == 4) {
      rep.issues.push_back(std::string("Weierstrass place ") + wp.name +
                           " maps to the extra branch value t");
    } else if (slot < 4) {
      ++rep.parity[static_cast<std::size_t>(slot)];
    }
  }
  const int placed = rep.parity[0] + rep.parity[1] + rep.parity[2] + rep.parity[3];
  rep.parity_ok = placed == 6 && lemma2_parity_check(rep.parity, n) &&
                  rep.parity == std::array<int, 4>{2, 2, 2, 0};
  if (!rep.parity_ok) rep.issues.push_back("Weierstrass image parity is not (2,2,2,0)");

  rep.verified = rep.issues.empty();
  return rep;
}

EmittedCurve emit_curve(const CoverInstance& c) {
  const VerificationReport rep = verify_cover(c);
  if (!rep.verified)
    throw std::domain_error("emit_curve requires an instance that passes verification");
  const std::array<Complex, 5> roots = {Complex(0), Complex(1), c.w4, c.w5, c.w6};
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (rel_dist(roots[i], roots[j]) < 1e-8)
        throw std::domain_error("emit_curve: Weierstrass points nearly collide");
  CPoly f = CPoly::constant(Complex(1));
  for (const auto& r : roots) f = f * linear_root(r);
  EmittedCurve out{f, igusa_invariants(f)};
  return out;
}

}  // namespace splitjac
