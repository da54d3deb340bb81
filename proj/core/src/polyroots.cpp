#include "splitjac/polyroots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splitjac {

std::vector<Complex> poly_roots(const CPoly& p) {
  const int d = p.degree();
  if (d < 1) throw std::domain_error("poly_roots: degree must be at least 1");
  const Complex lc = p.lc();

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coeff(i) / lc;
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("poly_roots: eigenvalue iteration failed");

  const CPoly dp = p.derivative();
  std::vector<Complex> roots;
  roots.reserve(d);
  for (int i = 0; i < d; ++i) {
    Complex z = solver.eigenvalues()(i);
    // Newton polish, accepting a step only while it reduces |p|. Near a
    // multiple root the step stalls quickly, which is fine.
    for (int it = 0; it < 6; ++it) {
      const Complex f = p.eval(z);
      const Complex df = dp.eval(z);
      if (std::abs(df) == 0.0) break;
      const Complex z_next = z - f / df;
      if (!(std::abs(p.eval(z_next)) < std::abs(f))) break;
      z = z_next;
    }
    roots.push_back(z);
  }

  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace splitjac
