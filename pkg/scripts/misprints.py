#!/usr/bin/env python3
"""Reproduce each misprinted formula next to its corrected form.

Every check is evaluated twice: exactly with the package where that makes
sense, and independently with mpmath partial sums at 30 digits.
"""

import math
from fractions import Fraction as F

import mpmath

from periodic_dedekind.bernoulli import periodic_P
from periodic_dedekind.dedekind import auto_b, s_sum
from periodic_dedekind.sequences import fourier_hat, make_sequence

mpmath.mp.dps = 30
PI = mpmath.pi


def partial(term, terms=800):
    return mpmath.fsum(term(mpmath.mpf(n)) for n in range(1, terms))


def show(title, printed, actual, corrected=None):
    print(f"\n{title}")
    print(f"  printed value   : {mpmath.nstr(printed, 15) if not isinstance(printed, F) else printed}")
    print(f"  computed value  : {mpmath.nstr(actual, 15) if not isinstance(actual, F) else actual}")
    if corrected is not None:
        print(f"  corrected value : {mpmath.nstr(corrected, 15) if not isinstance(corrected, F) else corrected}")


def shifted_reciprocity():
    one = make_sequence("const:k=1")
    c, d = 1, 2
    b = auto_b(d, c)
    R1, R2 = F(0), F(1, 3)
    lhs = s_sum(-c, d, one, c, one, -b, -R1, -R2) - s_sum(d, c, one, b, one, c, R2, -R1)
    shared = periodic_P(1, -R1, one, -b) * periodic_P(1, -R2, one, -c) - F(1, c * d) * periodic_P(2, c * R2 - d * R1, one)
    printed = shared - F(d, c) * periodic_P(2, R2, one, b) - F(c, d) * periodic_P(2, R1, one, c)
    fixed = shared - F(d, c) * periodic_P(2, R1, one, b) - F(c, d) * periodic_P(2, R2, one, c)
    show("shifted reciprocity, k = 1, (c, d) = (1, 2), (R1, R2) = (0, 1/3)",
         printed.to_fraction(), lhs.to_fraction(), fixed.to_fraction())


def exponential_k2():
    A = make_sequence("exp:k=2")
    Ah = fourier_hat(A)
    print("\nexponential sequence, k = 2: s(c,d;A_c,A^_b) + s(d,c;A^_b,A_c)")
    print(f"  {'c':>3}{'d':>4}  {'computed':>10}  {'-d/(24c)':>10}  {'(1+c^2)/(8cd)':>14}")
    for c, d in ((1, 2), (1, 4), (3, 2), (3, 8), (5, 6)):
        b = auto_b(d, c)
        val = (s_sum(c, d, A, c, Ah, b) + s_sum(d, c, Ah, b, A, c)).to_fraction()
        print(f"  {c:>3}{d:>4}  {str(val):>10}  {str(F(-d, 24 * c)):>10}  {str(F(1 + c * c, 8 * c * d)):>14}")


def cauchy():
    actual = partial(lambda n: (-1) ** int(n) * mpmath.csch(n * PI) / n**3)
    show("sum (-1)^n csch(n pi)/n^3", -PI**3 / 180, actual, -PI**3 / 360)


def modulus_6_example():
    def k6(g):
        return partial(lambda n: (-1) ** int(n) * mpmath.sin(2 * PI * n / 3) * mpmath.cosh(n * g)
                       / (n * (2 * mpmath.cosh(2 * n * g) + 1)))

    g = mpmath.mpf(2) / 5
    show("modulus 6 example, gamma = 2/5, gamma theta = pi^2/9", PI / 9, k6(g) + k6(PI**2 / (9 * g)), -PI / 9)


def modulus_8_example():
    def sinh_sum(g, damp):
        return partial(lambda n: (-1) ** int(n) * mpmath.exp(-damp * n * g) / (n * mpmath.sinh(2 * n * g)))

    g = mpmath.mpf(3) / 10
    th = PI**2 / (4 * g)
    show("modulus 8 example, e^(-12 n gamma) form, gamma = 3/10, gamma theta = pi^2/4",
         (g - th) / 3, sinh_sum(g, 12) - sinh_sum(th, 12))
    show("modulus 8 example, undamped form", (g - th) / 3, sinh_sum(g, 0) - sinh_sum(th, 0), (g - th) / 6)


if __name__ == "__main__":
    shifted_reciprocity()
    exponential_k2()
    cauchy()
    modulus_6_example()
    modulus_8_example()
