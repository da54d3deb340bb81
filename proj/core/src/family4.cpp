#include "splitjac/family4.hpp"

#include <stdexcept>

#include "splitjac/rational.hpp"
#include "splitjac/resultant.hpp"

namespace splitjac {

std::array<RatPoly, 3> family_quadratics(const Rational& b) {
  const Rational one(1), third(1, 3), two_thirds(2, 3);
  RatPoly q1({(one - b) * third, two_thirds * (one - b), one});
  RatPoly q2({Rational(1, 12) * (b - 4) * b, third * (b - 4), one});
  RatPoly q3({b, -two_thirds * (b + 2), one});
  return {q1, q2, q3};
}

DegenerateFamilyMember build_member(const Rational& b) {
  struct Factor {
    Rational root;
    const char* name;
  };
  static const Factor factors[] = {{Rational(0), "b"},
                                   {Rational(4), "(b-4)"},
                                   {Rational(2), "(b-2)"},
                                   {Rational(1), "(b-1)"},
                                   {Rational(-2), "(2+b)"}};
  for (const Factor& f : factors)
    if (b == f.root)
      throw std::domain_error(std::string("excluded parameter: factor ") +
                              f.name + " of the curve discriminant vanishes");
  auto q = family_quadratics(b);
  RatPoly f = q[0] * q[1] * q[2];
  Rational lambda = b * b * b * (Rational(4) - b) / (Rational(16) * (b - 1));
  Rational delta_c = b * (b - 4) * (b - 2) * (b - 1) * (b + 2);
  Rational delta_e = rational_pow(b - 4, 2) * rational_pow(b - 2, 6) *
                     rational_pow(b, 6) * rational_pow(b + 2, 2) /
                     (Rational(65536) * rational_pow(b - 1, 4));
  return DegenerateFamilyMember{b, GenusTwoCurve(std::move(f)), lambda, delta_c,
                                delta_e};
}

namespace {

Rational pw(const Rational& x, int e) { return rational_pow(x, e); }

Rational big(const char* s) { return parse_rational(s); }

}  // namespace

LocusReport evaluate_locus(const IgusaVector& v) {
  const Rational &J2 = v.J2, &J4 = v.J4, &J6 = v.J6, &J10 = v.J10;
  LocusReport rep;
  rep.invariants = v;
  rep.residue1 = big("1541086152812576000") * pw(J2, 2) * pw(J4, 2) -
                 big("22835312232360960000") * J2 * J4 * J6 +
                 big("5009676947631") * pw(J2, 6) -
                 big("8782271900467200000") * pw(J6, 2) +
                 big("1176812184652746480") * pw(J2, 4) * J4 +
                 big("12448207102988800000") * pw(J4, 3) -
                 big("3715799948429529600") * pw(J2, 3) * J6;
  rep.residue2 = big("186626560000") * pw(J2, 2) * pw(J4, 4) +
                 big("138962144767343358744576000000") * pw(J10, 2) +
                 big("282429536481/10000") * pw(J2, 10) +
                 big("619923800736") * pw(J2, 6) * pw(J4, 2) -
                 big("25600000000") * pw(J4, 5) -
                 big("28249152375924/100") * pw(J2, 8) * J4 +
                 big("266576269949878792320") * pw(J2, 5) * J10 -
                 big("510202022400") * pw(J2, 4) * pw(J4, 3) +
                 big("693067624145203200000") * J2 * pw(J4, 2) * J10 +
                 big("1763516708182388736000") * pw(J2, 3) * J4 * J10;
  rep.on_locus = rep.residue1 == 0 && rep.residue2 == 0;
  return rep;
}

LocusReport verify_locus(const DegenerateFamilyMember& m) {
  return evaluate_locus(igusa_invariants(m.curve));
}

bool verify_subcover_discriminant(const DegenerateFamilyMember& m) {
  Rational lhs = pw(m.lambda, 2) * pw(m.lambda - 1, 2);
  return lhs == m.delta_e && lhs != 0;
}

DiscriminantRootReport family_discriminant_rootset() {
  // The sextic's coefficients have degree <= 4 in b, so disc(b) has degree
  // at most 44; 60 interpolation nodes are enough, 5 more act as holdout.
  std::vector<std::pair<Rational, Rational>> nodes;
  auto disc_at = [](const Rational& b) {
    auto q = family_quadratics(b);
    return discriminant(q[0] * q[1] * q[2]);
  };
  for (int k = 5; k < 65; ++k) nodes.push_back({Rational(k), disc_at(Rational(k))});
  DiscriminantRootReport rep;
  rep.disc_poly = lagrange_interpolate(nodes);
  for (int k = 65; k < 70; ++k)
    if (rep.disc_poly.eval(Rational(k)) != disc_at(Rational(k)))
      throw std::runtime_error("discriminant interpolation failed holdout check");

  static const Rational printed_roots[] = {Rational(0), Rational(4), Rational(2),
                                           Rational(1), Rational(-2)};
  RatPoly rest = rep.disc_poly;
  for (const Rational& root : printed_roots) {
    int mult = 0;
    for (;;) {
      auto [quot, rem] = RatPoly::divmod(rest, linear_root<Rational>(root));
      if (!rem.is_zero()) break;
      rest = quot;
      ++mult;
    }
    rep.roots.push_back({root, mult});
  }
  rep.only_printed_roots = rest.degree() == 0 && !rest.is_zero();
  bool all_present = true;
  for (const auto& [root, mult] : rep.roots)
    if (mult == 0) all_present = false;
  rep.only_printed_roots = rep.only_printed_roots && all_present;
  return rep;
}

}  // namespace splitjac
