#pragma once

#include <array>
#include <utility>
#include <vector>

#include "splitjac/igusa.hpp"
#include "splitjac/poly.hpp"

namespace splitjac {

// Member of the one-parameter family of genus-2 curves with a degree-4
// totally-degenerate elliptic subcover: the sextic is a product of three
// explicit quadratics in the parameter b, the subcover is Legendre with
// lambda a fixed rational function of b.
struct DegenerateFamilyMember {
  Rational b;
  GenusTwoCurve curve;
  Rational lambda;   // b^3 (4-b) / (16 (b-1))
  Rational delta_c;  // b (b-4) (b-2) (b-1) (2+b)
  Rational delta_e;  // (b-4)^2 (b-2)^6 b^6 (b+2)^2 / (65536 (b-1)^4)
};

// The three quadratic factors of the family sextic at parameter b.
std::array<RatPoly, 3> family_quadratics(const Rational& b);

// Throws a domain error naming the vanishing factor when b is one of the
// excluded values {0, 4, 2, 1, -2}.
DegenerateFamilyMember build_member(const Rational& b);

struct LocusReport {
  IgusaVector invariants;
  Rational residue1;
  Rational residue2;
  bool on_locus = false;  // both residues exactly zero
};

// Exact evaluation of the two defining relations of the family locus on an
// arbitrary invariant vector.
LocusReport evaluate_locus(const IgusaVector& v);

// Same, on the member's own curve.
LocusReport verify_locus(const DegenerateFamilyMember& m);

// True iff lambda^2 (lambda-1)^2 matches the printed subcover discriminant
// exactly (the global constant between the two is 1) and both are nonzero.
bool verify_subcover_discriminant(const DegenerateFamilyMember& m);

struct DiscriminantRootReport {
  RatPoly disc_poly;  // sextic discriminant of the family as a polynomial in b
  std::vector<std::pair<Rational, int>> roots;  // printed roots with multiplicities
  bool only_printed_roots = false;  // nothing left after removing them
};

// Reconstructs disc(b) by exact interpolation at integer samples, verifies
// the reconstruction on held-out samples, and factors out the printed roots.
DiscriminantRootReport family_discriminant_rootset();

}  // namespace splitjac
