#include "splitjac/igusa.hpp"

#include "splitjac/binary_form.hpp"
#include "splitjac/resultant.hpp"

namespace splitjac {

namespace {

// Clebsch A, B, C, D of the sextic via transvectants, then the classical
// Igusa-Clebsch combination. The same chain runs over exact rationals and
// over complex doubles.
template <class S>
IgusaT<S> invariants_of_form(const BinaryForm<S>& f) {
  auto i = transvectant(f, f, 4);
  auto delta = transvectant(i, i, 2);
  auto y1 = transvectant(f, i, 4);
  auto y2 = transvectant(i, y1, 2);
  auto y3 = transvectant(i, y2, 2);
  S A = transvectant(f, f, 6).constant();
  S B = transvectant(i, i, 4).constant();
  S C = transvectant(i, delta, 4).constant();
  S D = transvectant(y3, y1, 2).constant();
  IgusaT<S> out;
  out.J2 = S(-120) * A;
  out.J4 = S(-720) * A * A + S(6750) * B;
  out.J6 = S(8640) * A * A * A - S(108000) * A * B + S(202500) * C;
  out.J10 = S(-62208) * A * A * A * A * A + S(972000) * A * A * A * B +
            S(1620000) * A * A * C - S(3037500) * A * B * B -
            S(6075000) * B * C - S(4556250) * D;
  return out;
}

}  // namespace

GenusTwoCurve::GenusTwoCurve(RatPoly f) : f_(std::move(f)) {
  int d = f_.degree();
  if (d < 5 || d > 6)
    throw std::domain_error("genus-2 model needs deg f in {5, 6}");
  if (discriminant(f_) == 0)
    throw std::domain_error("singular model: f has a repeated root");
}

IgusaVector igusa_invariants(const GenusTwoCurve& c) {
  return invariants_of_form(BinaryForm<Rational>::from_poly(c.f(), 6));
}

IgusaVectorC igusa_invariants(const CPoly& f) {
  int d = f.degree();
  if (d < 5 || d > 6)
    throw std::domain_error("genus-2 model needs deg f in {5, 6}");
  return invariants_of_form(BinaryForm<Complex>::from_poly(f, 6));
}

AbsoluteInvariants absolute_invariants(const IgusaVector& v) {
  if (v.J10 == 0) throw std::domain_error("absolute invariants need J10 != 0");
  AbsoluteInvariants out;
  if (v.J2 != 0) {
    out.j2_chart = true;
    Rational s = v.J2 * v.J2;
    out.values = {Rational(v.J2 * s * s / v.J10), Rational(s * v.J2 * v.J4 / v.J10),
                  Rational(s * v.J6 / v.J10)};
  } else {
    out.j2_chart = false;
    Rational s = v.J4 * v.J4;
    out.values = {Rational(s * s * v.J4 / (v.J10 * v.J10)),
                  Rational(v.J4 * v.J6 / v.J10),
                  Rational(v.J6 * v.J6 * v.J6 * v.J6 * v.J6 /
                           (v.J10 * v.J10 * v.J10))};
  }
  return out;
}

}  // namespace splitjac
