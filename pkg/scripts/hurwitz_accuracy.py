#!/usr/bin/env python3
"""Worst relative error of the double-precision special functions against mpmath."""

import itertools
from fractions import Fraction as F

import mpmath

from periodic_dedekind.analytic import dirichlet_L, gamma_fn, hurwitz_zeta
from periodic_dedekind.exact import embed
from periodic_dedekind.sequences import dirichlet_characters

mpmath.mp.dps = 30


def rel(a, b):
    b = complex(b)
    return abs(a - b) / max(1.0, abs(b))


def main():
    svals = [complex(x, y) for x, y in itertools.product((-7.5, -2, -0.5, 0, 0.5, 2.5, 6), (-8, -1, 0, 3))]
    svals = [s for s in svals if s != 1]
    thetas = [F(1, 9), F(1, 4), F(1, 2), F(2, 3), F(1)]
    worst = max(rel(hurwitz_zeta(s, t), mpmath.zeta(s, mpmath.mpf(t.numerator) / t.denominator))
                for s in svals for t in thetas)
    print(f"hurwitz_zeta : {len(svals) * len(thetas)} points, worst relative error {worst:.2e}")

    gpts = [complex(x, y) for x in (-5.5, -0.5, 0.25, 1, 3.7, 9) for y in (-4, 0, 0.5, 6)]
    worst = max(abs(gamma_fn(s) - complex(mpmath.gamma(s))) / abs(complex(mpmath.gamma(s))) for s in gpts)
    print(f"gamma_fn     : {len(gpts)} points, worst relative error {worst:.2e}")

    worst, n = 0.0, 0
    for k in range(3, 13):
        for chi in dirichlet_characters(k):
            for r in (1, 2, 3, 4):
                if r == 1 and chi.is_principal:
                    continue
                coeffs = [embed(chi(v)) for v in range(k)]
                if r == 1:
                    # mpmath.dirichlet is very slow at s = 1; use its digamma instead
                    ref = -mpmath.fsum(coeffs[v] * mpmath.digamma(mpmath.mpf(v) / k) for v in range(1, k)) / k
                else:
                    ref = mpmath.dirichlet(r, coeffs)
                worst = max(worst, rel(dirichlet_L(r, chi), ref))
                n += 1
    print(f"dirichlet_L  : {n} values, worst relative error {worst:.2e}")


if __name__ == "__main__":
    main()
