"""Bernoulli numbers, polynomials and functions, plain and periodic.

Conventions: B_1 = -1/2, and P_n(x) = B_n(x - floor(x)) / n!, so P_1 takes
the value -1/2 at integers (unlike the sawtooth ((x)), which is 0 there).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import CapacityError, DomainError
from .exact import ZERO, Cyclotomic
from .sequences import DirichletCharacter, PeriodicSequence, alternating_sequence

DEFAULT_MAX_INDEX = 64


def _check(n: int, cap: int = DEFAULT_MAX_INDEX) -> None:
    if n < 0:
        raise DomainError(f"Bernoulli index must be nonnegative, got {n}")
    if n > cap:
        raise CapacityError(f"Bernoulli index {n} exceeds cap {cap}")


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(math.comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return tuple(b)


def bernoulli_number(n: int) -> Fraction:
    _check(n)
    return _bernoulli_table(DEFAULT_MAX_INDEX)[n]


@lru_cache(maxsize=None)
def _euler_table(n: int) -> tuple[int, ...]:
    # sum_{j even} C(m, j) E_j = 0 for even m >= 2 (secant recurrence)
    e = [0] * (n + 1)
    e[0] = 1
    for m in range(2, n + 1, 2):
        e[m] = -sum(math.comb(m, j) * e[j] for j in range(0, m, 2))
    return tuple(e)


def euler_number(n: int) -> int:
    _check(n)
    return _euler_table(DEFAULT_MAX_INDEX)[n]


def bernoulli_poly(n: int, x) -> Fraction:
    """B_n(x) = sum_j C(n, j) B_j x^(n-j)."""
    _check(n)
    x = Fraction(x)
    b = _bernoulli_table(DEFAULT_MAX_INDEX)
    return sum((math.comb(n, j) * b[j] * x ** (n - j) for j in range(n + 1)), Fraction(0))


def frac(x) -> Fraction:
    x = Fraction(x)
    return x - math.floor(x)


@lru_cache(maxsize=4096)
def bernoulli_function_P(n: int, x) -> Fraction:
    """P_n(x) = B_n({x}) / n!."""
    return bernoulli_poly(n, frac(x)) / math.factorial(n)


def sawtooth(x) -> Fraction:
    """((x)): x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return frac(x) - Fraction(1, 2)


def periodic_P(n: int, x, seq: PeriodicSequence, c: int = 1) -> Cyclotomic:
    """P_n(x, A_c) = k^(n-1) sum_v f(-c v) P_n((v + x)/k).

    At n = 0 this is B_0(A_c), the mean of A.
    """
    _check(n)
    k = seq.period
    x = Fraction(x)
    acc = ZERO
    for v in range(k):
        fv = seq(-c * v)
        if fv:
            acc = acc + fv * bernoulli_function_P(n, (v + x) / k)
    return acc * Fraction(k) ** (n - 1)


def periodic_B(j: int, seq: PeriodicSequence) -> Cyclotomic:
    """B_j(A) = k^(j-1) sum_n f(n) B_j(n/k)."""
    _check(j)
    k = seq.period
    acc = ZERO
    for n in range(k):
        if seq.values[n]:
            acc = acc + seq.values[n] * bernoulli_poly(j, Fraction(n, k))
    return acc * Fraction(k) ** (j - 1)


def periodic_B_poly(j: int, x, seq: PeriodicSequence) -> Cyclotomic:
    """B_j(x, A) = k^(j-1) sum_n f(-n) B_j((n + x)/k)."""
    _check(j)
    k = seq.period
    x = Fraction(x)
    acc = ZERO
    for n in range(k):
        fn = seq(-n)
        if fn:
            acc = acc + fn * bernoulli_poly(j, (n + x) / k)
    return acc * Fraction(k) ** (j - 1)


def generating_series_B(seq: PeriodicSequence, order: int) -> list[Cyclotomic]:
    """Coefficients of sum_n f(n) t e^(nt) / (e^(kt) - 1) up to t^order.

    Exact formal power series division; entry j equals B_j(A)/j!.
    """
    k = seq.period
    num = []
    for i in range(order + 1):
        acc = ZERO
        for n in range(k):
            if seq.values[n]:
                acc = acc + seq.values[n] * Fraction(n**i, math.factorial(i))
        num.append(acc)
    # (e^(kt) - 1)/t = sum_i k^(i+1) t^i / (i+1)!
    den = [Fraction(k ** (i + 1), math.factorial(i + 1)) for i in range(order + 1)]
    out: list[Cyclotomic] = []
    for i in range(order + 1):
        acc = num[i]
        for j in range(i):
            acc = acc - out[j] * den[i - j]
        out.append(acc / den[0])
    return out


# ---------------------------------------------------------------------------
# alternating variants, {(-1)^v chi(v)}


def _alternating(chi: DirichletCharacter) -> PeriodicSequence:
    if chi.modulus % 2:
        raise DomainError(
            f"alternating Bernoulli functions need even modulus, got k={chi.modulus}"
        )
    return alternating_sequence(chi)


def P_star(m: int, x, chi: DirichletCharacter) -> Cyclotomic:
    """P*_m(x, chi) = k^(m-1) sum_v (-1)^v conj(chi)(v) P_m((v + x)/k).

    Passing chi = conj(psi) gives the twisted function of {(-1)^v psi(v)}.
    """
    _check(m)
    k = chi.modulus
    alt = _alternating(chi.conj())
    x = Fraction(x)
    acc = ZERO
    for v in range(k):
        if alt.values[v]:
            acc = acc + alt.values[v] * bernoulli_function_P(m, (v + x) / k)
    return acc * Fraction(k) ** (m - 1)


def B_star(m: int, chi: DirichletCharacter, *, normalized: bool = True) -> Cyclotomic:
    """B*_m(chi) = (-1)^m m! P*_m(0, chi), mirroring P_r(0, A) = (-1)^r B_r(A)/r!.

    Explicitly (-1)^m k^(m-1) sum_v (-1)^v conj(chi)(v) B_m(v/k).  With
    ``normalized=False`` the raw sum sum_v (-1)^v conj(chi)(v) B_m(v/k) is
    returned instead; that is the form of the worked values
    B*_0(chi_0 mod 8) = -4 and B*_2(chi_0 mod 8) = -2 (B_2(1/8) + B_2(3/8)).
    Products B*_0 B*_2 agree in both forms.
    """
    _check(m)
    k = chi.modulus
    alt = _alternating(chi.conj())
    acc = ZERO
    for v in range(k):
        if alt.values[v]:
            acc = acc + alt.values[v] * bernoulli_poly(m, Fraction(v, k))
    if not normalized:
        return acc
    return acc * ((-1) ** m * Fraction(k) ** (m - 1))
