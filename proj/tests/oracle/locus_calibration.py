#!/usr/bin/env python3
"""Determine the (J2, J4, J6, J10) normalization for which the two locus
relations of the degree-4 degenerate family vanish identically.

Candidates tried, in order:
  A. J = Igusa-Clebsch I  (identity)
  B. Igusa's J-invariants: J2=I2/8, J4=(4*J2^2-I4)/96,
     J6=(8*J2^3-160*J2*J4-I6)/576, J10=I10/4096
  C. diagonal rescaling  J_{2k} = c_{2k} * I_{2k}  solved from samples
"""

import sympy as sp
from igusa_oracle import sextic_from_affine, igusa_clebsch

x = sp.symbols("x")
J2, J4, J6, J10 = sp.symbols("J2 J4 J6 J10")

REL1 = (sp.Integer(1541086152812576000) * J2 ** 2 * J4 ** 2
        - sp.Integer(22835312232360960000) * J2 * J4 * J6
        + sp.Integer(5009676947631) * J2 ** 6
        - sp.Integer(8782271900467200000) * J6 ** 2
        + sp.Integer(1176812184652746480) * J2 ** 4 * J4
        + sp.Integer(12448207102988800000) * J4 ** 3
        - sp.Integer(3715799948429529600) * J2 ** 3 * J6)

REL2 = (sp.Integer(186626560000) * J2 ** 2 * J4 ** 4
        + sp.Integer(138962144767343358744576000000) * J10 ** 2
        + sp.Rational(282429536481, 10 ** 4) * J2 ** 10
        + sp.Integer(619923800736) * J2 ** 6 * J4 ** 2
        - sp.Integer(25600000000) * J4 ** 5
        - sp.Rational(28249152375924, 100) * J2 ** 8 * J4
        + sp.Integer(266576269949878792320) * J2 ** 5 * J10
        - sp.Integer(510202022400) * J2 ** 4 * J4 ** 3
        + sp.Integer(693067624145203200000) * J2 * J4 ** 2 * J10
        + sp.Integer(1763516708182388736000) * J2 ** 3 * J4 * J10)


def family_sextic(b):
    b = sp.Rational(b)
    q1 = (1 - b) / 3 + sp.Rational(2, 3) * (1 - b) * x + x ** 2
    q2 = sp.Rational(1, 12) * (b - 4) * b + sp.Rational(1, 3) * (b - 4) * x + x ** 2
    q3 = b - sp.Rational(2, 3) * (b + 2) * x + x ** 2
    f = sp.expand(q1 * q2 * q3)
    return [f.coeff(x, i) for i in range(7)]


def eval_rels(jvals):
    sub = dict(zip((J2, J4, J6, J10), jvals))
    return sp.Rational(REL1.subs(sub)), sp.Rational(REL2.subs(sub))


def igusa_J_from_I(I):
    i2, i4, i6, i10 = [sp.Rational(v) for v in I]
    j2 = i2 / 8
    j4 = (4 * j2 ** 2 - i4) / 96
    j6 = (8 * j2 ** 3 - 160 * j2 * j4 - i6) / 576
    j10 = i10 / 4096
    return j2, j4, j6, j10


def main():
    samples = [sp.Rational(3), sp.Rational(5), sp.Rational(-1),
               sp.Rational(7, 2), sp.Rational(1, 3)]
    Ivecs = []
    for b in samples:
        coeffs = family_sextic(b)
        I = igusa_clebsch(sextic_from_affine(coeffs))
        Ivecs.append((b, I))
        print(f"b={b}: I = {I}")

    print("\n-- candidate A: J = Igusa-Clebsch I --")
    okA = True
    for b, I in Ivecs:
        r1, r2 = eval_rels(I)
        print(f"  b={b}: rel1={r1}  rel2={r2}")
        okA = okA and r1 == 0 and r2 == 0
    print("candidate A vanishes identically:", okA)

    if not okA:
        print("\n-- candidate B: Igusa J from I --")
        okB = True
        for b, I in Ivecs:
            r1, r2 = eval_rels(igusa_J_from_I(I))
            print(f"  b={b}: rel1={r1}  rel2={r2}")
            okB = okB and r1 == 0 and r2 == 0
        print("candidate B vanishes identically:", okB)

        if not okB:
            print("\n-- candidate C: solve diagonal rescale (c2 fixed to 1) --")
            c4, c6, c10 = sp.symbols("c4 c6 c10")
            eqs = []
            for b, I in Ivecs[:4]:
                jv = (I[0], c4 * I[1], c6 * I[2], c10 * I[3])
                r1, r2 = eval_rels(jv)
                eqs += [sp.Eq(r1, 0), sp.Eq(r2, 0)]
            sol = sp.solve(eqs[:6], (c4, c6, c10), dict=True)
            print("solutions:", sol)


if __name__ == "__main__":
    main()
