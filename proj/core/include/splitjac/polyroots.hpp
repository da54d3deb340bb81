#pragma once

#include <vector>

#include "splitjac/poly.hpp"

namespace splitjac {

// All complex roots of p (degree >= 1) via companion-matrix eigenvalues,
// each polished by guarded Newton steps; returned sorted by (re, im) so the
// output is deterministic. Multiple roots appear as numerically close copies.
std::vector<Complex> poly_roots(const CPoly& p);

}  // namespace splitjac
