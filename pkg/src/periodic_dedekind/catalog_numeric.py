"""Numeric identities, checked in double precision with rigorous tail bounds.

Each evaluator returns a :class:`NumericOutcome` carrying the residual
magnitude and the summed bound of every series truncation behind it.
Hand-summed series stop once an explicit geometric majorant of the
remainder drops below ``TAIL``.

Parameters are JSON values: complex points as ``[re, im]`` pairs of
fraction strings, real parameters as fraction strings optionally followed
by ``pi`` (``"1/4pi"``), characters as ``(k, i)`` index pairs.
"""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction
from functools import lru_cache

from .analytic import (
    A_series,
    SeriesBudget,
    _geom_poly_tail,
    cpow,
    dirichlet_L,
    eisenstein_G_direct,
    G_via_fourier,
    gamma_G_via_fourier,
    log,
    loop_I_quadrature,
    loop_I_residue,
    periodic_L,
)
from .bernoulli import (
    B_star,
    P_star,
    bernoulli_poly,
    euler_number,
    periodic_B,
    periodic_P,
)
from .dedekind import alternating_char_sum, dedekind_kernel, s_sum
from .errors import AccuracyError, DomainError
from .exact import embed, root_of_unity
from .identities import Mode, NumericOutcome, register
from .sequences import (
    character,
    dirichlet_characters,
    gauss_sequence,
    gauss_sum,
    make_sequence,
    principal_character,
    ramanujan_sequence,
    ramanujan_sum,
)

F = Fraction
PI = math.pi
NUM = Mode.NUMERIC
TAIL = 1e-15
# cap on terms per hand-summed series; the CLI may lower or raise it
MAX_TERMS = 200_000


# ---------------------------------------------------------------------------
# parameter encoding


def real(v) -> float:
    """'3/4' -> 0.75, '1/4pi' -> pi/4, 'pi' -> pi; numbers pass through."""
    if isinstance(v, (int, float)):
        return float(v)
    v = v.strip()
    if v.endswith("pi"):
        head = v[:-2] or "1"
        return float(F(head)) * PI
    return float(F(v))


def point(v) -> complex:
    return complex(real(v[0]), real(v[1]))


I_PT = ["0", "1"]
Z_PTS = (I_PT, ["3/10", "9/10"])


@lru_cache(maxsize=None)
def seq(spec: str):
    return make_sequence(spec)


def chi(k, i):
    return character(k, i)


def outcome(lhs: complex, rhs: complex, tail: float = 0.0) -> NumericOutcome:
    return NumericOutcome(abs(lhs - rhs), tail)


# ---------------------------------------------------------------------------
# series with certified remainders


def series(term, bound, start: int = 1, target: float = TAIL, max_terms: int | None = None):
    """(sum_{n >= start} term(n), remainder bound).

    ``bound(n)`` must dominate sum_{j >= n} |term(j)|.
    """
    max_terms = max_terms or MAX_TERMS
    acc = 0j
    n = start
    while True:
        rest = bound(n)
        if rest <= target:
            return acc, rest
        acc += term(n)
        n += 1
        if n - start > max_terms:
            raise AccuracyError(f"series needed more than {max_terms} terms", achieved_tail=rest)


def geometric(C: float, q: float, power: float = 0.0):
    """n0 -> C sum_{n >= n0} n^power q^n."""

    def bound(n0: int) -> float:
        if n0 < 1:
            return math.inf
        return C * _geom_poly_tail(q, power + 1, n0)

    return bound


def vals(x) -> list[complex]:
    return [embed(x(v)) for v in range(x.modulus)]


def gvals(x, shift: int = 0) -> list[complex]:
    return [embed(gauss_sum(n + shift, x)) for n in range(x.modulus)]


def altvals(x) -> list[complex]:
    return [(-1) ** v * embed(x(v)) for v in range(x.modulus)]


def gx(x: complex, table: list[complex]) -> complex:
    """sum_v table[v] e(x v/k), e.g. G(x, chi) when table lists chi."""
    k = len(table)
    return sum(t * cmath.exp(2j * PI * x * v / k) for v, t in enumerate(table) if t)


def gauss_quotient_bound(y: float, k: int) -> tuple[float, float]:
    """(C, q) with |G(nw)/(1 - e(nw))| <= C q^n for Im w = y > 0 and |chi| <= 1, chi(0) = 0."""
    q = math.exp(-2 * PI * y / k)
    return 1 / ((1 - q) * (1 - math.exp(-2 * PI * y))), q


def Bc(m: int, x) -> complex:
    return embed(periodic_B(m, x.seq))


def same_parity_pairs(k: int):
    cs = dirichlet_characters(k)
    return [(a, b) for a in cs for b in cs if a.parity == b.parity]


def A0(z, A, B, tails: list) -> complex:
    bud = SeriesBudget(tail_bound_target=1e-14)
    val = A_series(z, 0, A, B, budget=bud)
    tails.append(bud.achieved_tail)
    return val


# ---------------------------------------------------------------------------
# N1: the Fourier expansion against the lattice sum


def _n1_domain():
    out = []
    for k in (3, 4):
        n = len(dirichlet_characters(k))
        for i1 in range(n):
            for i2 in range(n):
                for s in (["3", "0"], ["5/2", "1/2"]):
                    for z in Z_PTS:
                        out.append({"k": k, "i1": i1, "i2": i2, "s": s, "z": z})
    return out


@register("N1", "Fourier expansion of the Eisenstein series against its lattice sum", NUM, _n1_domain, tolerance=1e-7)
def n1(p):
    A, B = chi(p["k"], p["i1"]).seq, chi(p["k"], p["i2"]).seq
    z, s = point(p["z"]), point(p["s"])
    bd = SeriesBudget(tail_bound_target=1e-10)
    bf = SeriesBudget(tail_bound_target=1e-13)
    direct = eisenstein_G_direct(z, s, A, B, budget=bd)
    fourier = G_via_fourier(z, s, A, B, budget=bf)
    return outcome(direct, fourier, bd.achieved_tail + bf.achieved_tail)


# ---------------------------------------------------------------------------
# N2, N3: transformation of the A-series at s = -2N


def s4_rhs(z: complex, N: int, c1, c2) -> complex:
    k = c1.modulus
    f = math.factorial
    acc = sum(
        (-1) ** m * Bc(m, c2) * Bc(2 * N + 2 - m, c1) / (f(m) * f(2 * N + 2 - m)) * z ** (m - 1)
        for m in range(2 * N + 3)
    )
    return -((2j * PI) ** (2 * N + 1)) / (2 * k ** (2 * N)) * acc


def _n2_domain():
    out = []
    for k in (3, 4, 5):
        for c1, c2 in same_parity_pairs(k):
            for N in (0, 1, 2):
                for z in (I_PT, ["1/3", "2/3"]):
                    for form in ("series", "A"):
                        out.append({"form": form, "k": k, "i1": c1.number, "i2": c2.number, "N": N, "z": z})
    return out


@register("N2", "transformation of the A-series at s = -2N", NUM, _n2_domain, tolerance=1e-9)
def n2(p):
    k, N, z = p["k"], p["N"], point(p["z"])
    c1, c2 = chi(k, p["i1"]), chi(k, p["i2"])
    w = -1 / z
    if p["form"] == "A":
        b1 = SeriesBudget(tail_bound_target=1e-14)
        b2 = SeriesBudget(tail_bound_target=1e-14)
        first = A_series(w, -2 * N, vals(c1), gvals(c2), budget=b1)
        second = A_series(z, -2 * N, vals(c2), gvals(c1), budget=b2)
        lhs = z ** (2 * N) * first - embed(c1(-1)) * second
        tails = abs(z) ** (2 * N) * b1.achieved_tail + b2.achieved_tail
        return outcome(lhs, s4_rhs(z, N, c1, c2), tails)
    t1, t2 = vals(c1), vals(c2)
    phi = sum(abs(v) for v in t2)
    C1, q1 = gauss_quotient_bound(w.imag, k)
    C2, q2 = gauss_quotient_bound(z.imag, k)
    first, e1 = series(
        lambda n: gx(n, t2) * gx(-n / z, t1) / (1 - cmath.exp(-2j * PI * n / z)) * n ** (-2 * N - 1),
        geometric(phi * C1, q1, -2 * N - 1),
    )
    second, e2 = series(
        lambda n: gx(n, t1) * gx(n * z, t2) / (1 - cmath.exp(2j * PI * n * z)) * n ** (-2 * N - 1),
        geometric(phi * C2, q2, -2 * N - 1),
    )
    lhs = z ** (2 * N) * first - embed(c1(-1)) * second
    return outcome(lhs, s4_rhs(z, N, c1, c2), abs(z) ** (2 * N) * e1 + e2)


def _n3_domain():
    out = []
    for k in (3, 4, 5):
        for c1, c2 in same_parity_pairs(k):
            for N in (0, 1, 2):
                for g in ("7/10", "13/10"):
                    out.append({"k": k, "i1": c1.number, "i2": c2.number, "N": N, "gamma": g})
    return out


@register("N3", "the A-series transformation on the imaginary axis, gamma theta = pi^2/k^2", NUM, _n3_domain, tolerance=1e-10)
def n3(p):
    k, N, g = p["k"], p["N"], real(p["gamma"])
    c1, c2 = chi(k, p["i1"]), chi(k, p["i2"])
    th = PI**2 / (k * k * g)
    t1, t2 = vals(c1), vals(c2)

    def half(tA, tB, t):
        phi = sum(abs(v) for v in tB)
        C, q = gauss_quotient_bound(k * t / PI, k)
        return series(
            lambda n: gx(n, tB) * gx(1j * n * k * t / PI, tA) / (1 - math.exp(-2 * n * k * t)) * n ** (-2 * N - 1),
            geometric(phi * C, q, -2 * N - 1),
        )

    s1, e1 = half(t1, t2, g)
    s2, e2 = half(t2, t1, th)
    lhs = g ** (-N) * s1 - (-th) ** (-N) * embed(c1(-1)) * s2
    f = math.factorial
    rhs = -k * 2 ** (2 * N) * sum(
        (-1j) ** m * Bc(m, c2) * Bc(2 * N + 2 - m, c1) / (f(m) * f(2 * N + 2 - m)) * g ** (N + 1 - m / 2) * th ** (m / 2)
        for m in range(2 * N + 3)
    )
    return outcome(lhs, rhs, g ** (-N) * e1 + th ** (-N) * e2)


# ---------------------------------------------------------------------------
# N4, N_ex1: sech series for the character mod 4


def sech_sum(g: float, N: int):
    x = chi(4, 1)
    q = math.exp(-2 * g)
    return series(lambda n: embed(x(n)) / math.cosh(2 * n * g) / n ** (2 * N + 1), geometric(2.0, q, -2 * N - 1))


def _n4_domain():
    out = [{"form": "transform", "N": N, "gamma": g} for N in range(4) for g in ("3/10", "1/4pi", "11/10")]
    out.append({"form": "symmetric", "N": 0, "gamma": "1/4pi"})
    return out


@register("N4", "sech series under gamma theta = pi^2/16, character mod 4", NUM, _n4_domain, tolerance=1e-10)
def n4(p):
    N, g = p["N"], real(p["gamma"])
    th = PI**2 / (16 * g)
    if p["form"] == "symmetric":
        v, e = sech_sum(g, 0)
        return outcome(2 * v, PI / 4, 2 * e)
    s1, e1 = sech_sum(g, N)
    s2, e2 = sech_sum(th, N)
    lhs = g ** (-N) * s1 + (-th) ** (-N) * s2
    f = math.factorial
    E = euler_number
    rhs = 2 ** (2 * N) * PI / 4 * sum(
        (-1) ** m * E(2 * m) * E(2 * N - 2 * m) / (f(2 * m) * f(2 * N - 2 * m)) * g ** (N - m) * th**m
        for m in range(N + 1)
    )
    return outcome(lhs, rhs, g ** (-N) * e1 + th ** (-N) * e2)


def exp_cosh_sum(g: float):
    """sum chi(n)/(n (e^(n g/2) + e^(-n g/2))), chi mod 4."""
    x = chi(4, 1)
    return series(
        lambda n: embed(x(n)) / (n * (math.exp(n * g / 2) + math.exp(-n * g / 2))),
        geometric(1.0, math.exp(-g / 2), -1),
    )


@register(
    "N_ex1",
    "character mod 4 sum over e^(n gamma/2) + e^(-n gamma/2), gamma theta = pi^2",
    NUM,
    lambda: [{"gamma": g} for g in ("1pi", "1/2pi", "3/2", "4")],
    tolerance=1e-10,
)
def n_ex1(p):
    g = real(p["gamma"])
    s1, e1 = exp_cosh_sum(g)
    s2, e2 = exp_cosh_sum(PI**2 / g)
    return outcome(s1 + s2, PI / 8, e1 + e2)


# ---------------------------------------------------------------------------
# N5, N_cauchy: alternating csch series


def csch_sum(g: float, power: int):
    q = math.exp(-g)
    return series(
        lambda n: (-1) ** n / math.sinh(n * g) / n**power,
        geometric(2 / (1 - math.exp(-2 * g)), q, -power),
    )


def s44_rhs(N: int, g: float, th: float) -> float:
    f = math.factorial
    h = F(1, 2)
    acc = sum(
        (-1) ** m * float(bernoulli_poly(2 * m, h) * bernoulli_poly(2 * N + 2 - 2 * m, h)) / (f(2 * m) * f(2 * N + 2 - 2 * m))
        * g ** (N + 1 - m) * th**m
        for m in range(N + 2)
    )
    return -(2 ** (2 * N + 1)) * acc


@register(
    "N5",
    "alternating csch series under gamma theta = pi^2",
    NUM,
    lambda: [{"N": N, "gamma": g} for N in range(5) for g in ("1/2", "1pi", "11/5")],
    tolerance=1e-10,
)
def n5(p):
    N, g = p["N"], real(p["gamma"])
    th = PI**2 / g
    s1, e1 = csch_sum(g, 2 * N + 1)
    s2, e2 = csch_sum(th, 2 * N + 1)
    lhs = g ** (-N) * s1 - (-th) ** (-N) * s2
    return outcome(lhs, s44_rhs(N, g, th), g ** (-N) * e1 + th ** (-N) * e2)


def cauchy_bernoulli_side(M: int) -> float:
    """-(2 pi)^(4M+3) sum_{m=0}^{2M+2} (-1)^m B_2m(1/2) B_(4M+4-2m)(1/2) / ((2m)! (4M+4-2m)!)."""
    f = math.factorial
    h = F(1, 2)
    acc = sum(
        F((-1) ** m, f(2 * m) * f(4 * M + 4 - 2 * m)) * bernoulli_poly(2 * m, h) * bernoulli_poly(4 * M + 4 - 2 * m, h)
        for m in range(2 * M + 3)
    )
    return -((2 * PI) ** (4 * M + 3)) * float(acc)


@register(
    "N_cauchy",
    "sum (-1)^n csch(n pi)/n^(4M+3) at gamma = theta = pi",
    NUM,
    lambda: [{"M": M} for M in (0, 1, 2)],
    tolerance=1e-10,
)
def n_cauchy(p):
    # the symmetric point doubles the sum on the left, hence the 1/2
    M = p["M"]
    v, e = csch_sum(PI, 4 * M + 3)
    return outcome(v, cauchy_bernoulli_side(M) / 2, e)


@register(
    "X_cauchy",
    "Cauchy's csch sum with the Bernoulli side as printed (missing factor 1/2)",
    NUM,
    lambda: [{"M": M} for M in (0, 1)],
    tolerance=1e-10,
    holds=False,
)
def x_cauchy(p):
    M = p["M"]
    v, e = csch_sum(PI, 4 * M + 3)
    return outcome(v, cauchy_bernoulli_side(M), e)


# ---------------------------------------------------------------------------
# N6, N7: the symmetric point z = i


def s5_rhs(N: int, x) -> complex:
    k = x.modulus
    f = math.factorial
    if N < -1:
        return 0j
    acc = sum((-1j) ** m * Bc(m, x) * Bc(2 * N + 2 - m, x) / (f(m) * f(2 * N + 2 - m)) for m in range(2 * N + 3))
    return -k * (2 * PI / k) ** (2 * N + 1) / 4 * acc


def s5_sum(x, power: int):
    """sum G(n, chi) G(in, chi) n^power / (1 - e^(-2 pi n))."""
    t = vals(x)
    k = x.modulus
    C, q = gauss_quotient_bound(1.0, k)
    phi = sum(abs(v) for v in t)
    return series(
        lambda n: gx(n, t) * gx(1j * n, t) / (1 - math.exp(-2 * PI * n)) * float(n) ** power,
        geometric(phi * C, q, power),
    )


def _n6_domain():
    out = []
    for k in (3, 4, 5, 8):
        for x in dirichlet_characters(k):
            for N in range(-3, 3):
                if x.parity * (-1) ** N == -1:
                    out.append({"form": "transform", "k": k, "i": x.number, "N": N})
            out.append({"form": "odd" if x.parity == -1 else "even", "k": k, "i": x.number})
    return out


@register("N6", "the A-series at z = i and its odd, even and vanishing consequences", NUM, _n6_domain, tolerance=1e-10)
def n6(p):
    x = chi(p["k"], p["i"])
    k = x.modulus
    if p["form"] == "transform":
        N = p["N"]
        v, e = s5_sum(x, -2 * N - 1)
        return outcome(v, s5_rhs(N, x), e)
    if p["form"] == "odd":
        v, e = s5_sum(x, -1)
        return outcome(v, 1j * PI / 2 * Bc(1, x) ** 2, e)
    v, e = s5_sum(x, 1)
    return outcome(v, -(k**2) / (8 * PI) * Bc(0, x) ** 2, e)


def _n7_domain():
    out = []
    for k in (3, 4, 5):
        for x in dirichlet_characters(k):
            for N in (0, 1, 2):
                if x.parity * (-1) ** N == 1:
                    out.append({"k": k, "i": x.number, "N": N})
    return out


@register("N7", "derivative of the z = i relation", NUM, _n7_domain, tolerance=1e-10)
def n7(p):
    x = chi(p["k"], p["i"])
    k, N = x.modulus, p["N"]
    t = vals(x)
    phi = sum(abs(v) for v in t)
    a = 2 * PI / k
    Q = math.exp(-a)
    # rows m >= M: sum_n phi (N + a m n) x_m^n <= phi/(1-Q)^2 sum_m (N + a m) x_m
    outer = lambda M: phi / (1 - Q) ** 2 * (N * _geom_poly_tail(Q, 1, M) + a * _geom_poly_tail(Q, 2, M))  # noqa: E731
    total, tails, m = 0j, 0.0, 1
    while outer(m) > TAIL:
        w = embed(x(m))
        if w:
            xm = math.exp(-a * m)
            row, e = series(
                lambda n: gx(n, t) * xm**n * float(n) ** (-2 * N - 1) * (N + a * m * n),
                lambda n0: phi * (N * _geom_poly_tail(xm, 1, n0) + a * m * _geom_poly_tail(xm, 2, n0)) if n0 else math.inf,
            )
            total += w * row
            tails += e
        m += 1
    f = math.factorial
    rhs = -k * a ** (2 * N + 1) / 4 * sum(
        (-1j) ** j * (j - 1) * Bc(j, x) * Bc(2 * N + 2 - j, x) / (f(j) * f(2 * N + 2 - j)) for j in range(2 * N + 3)
    )
    return outcome(total, rhs, tails + outer(m))


# ---------------------------------------------------------------------------
# N8: A-series against exact periodic Dedekind sums

MAPS = {
    3: ((0, -1, 1, 0), (3, 2, 4, 3), (3, 1, 8, 3)),
    4: ((0, -1, 1, 0), (4, 3, 5, 4), (4, 5, 3, 4)),
    5: ((0, -1, 1, 0), (5, 2, 12, 5), (5, 3, 8, 5)),
}


def _n8_domain():
    out = []
    for k in (3, 4, 5):
        cs = dirichlet_characters(k)
        for c1 in cs:
            for c2 in cs:
                for V in MAPS[k]:
                    for z in Z_PTS:
                        out.append({"k": k, "i1": c1.number, "i2": c2.number, "V": list(V), "z": z})
    return out


@register("N8", "A-series transformation with the exact character Dedekind sum", NUM, _n8_domain, tolerance=1e-10)
def n8(p):
    k, z = p["k"], point(p["z"])
    a, b, c, d = p["V"]
    c1, c2 = chi(k, p["i1"]), chi(k, p["i2"])
    Vz, cz = (a * z + b) / (c * z + d), c * z + d
    tails: list[float] = []
    weight = 1 + embed(c1(-1) * c2(-1))
    lhs = (A0(Vz, vals(c1), gvals(c2), tails) - embed(c1(c) * c2(b)) * A0(z, vals(c2), gvals(c1), tails)) * weight
    rhs = (
        2j * PI * embed(c1(c) * c2(b) * s_sum(d, c, c2.seq, 1, c1.seq, 1))
        - 1j * PI / (c * cz) * Bc(0, c2) * Bc(2, c1)
        - 2j * PI * embed(c2(b)) / c * cz * Bc(0, c1) * embed(periodic_P(2, 0, c2.seq))
    )
    return outcome(lhs, rhs, abs(weight) * (tails[0] + tails[1]))


# ---------------------------------------------------------------------------
# N9: Gauss-sequence transformation and the cosh examples


def _both_or_neither(k: int):
    return [(a, b) for a, b in same_parity_pairs(k) if a.is_principal == b.is_principal]


def _n9_domain():
    out = []
    for k in (3, 4, 5):
        for c1, c2 in _both_or_neither(k):
            for V in MAPS[k]:
                for z in Z_PTS:
                    out.append({"form": "gauss", "k": k, "i1": c1.number, "i2": c2.number, "V": list(V), "z": z})
    for k in (3, 4, 5, 6):
        for c1, c2 in _both_or_neither(k):
            for g in ("2/5", f"1/{k}pi", "3/2"):
                out.append({"form": "axis", "k": k, "i1": c1.number, "i2": c2.number, "gamma": g})
    for g in ("3/10", "1/6pi", "1"):
        out.append({"form": "cosh_minus", "gamma": g})
    out.append({"form": "cosh_minus_symmetric", "gamma": "1/6pi"})
    for g in ("3/10", "1/3pi", "1"):
        out.append({"form": "cosh_plus", "gamma": g})
    return out


def cosh_sum(g: float, sign: int, k: int):
    """sum chi(n)/(n (2 cosh(2 n g) + sign)) for the real odd character mod k."""
    x = chi(k, 1)
    C = 1 / (1 - math.exp(-2 * g)) if sign < 0 else 1.0
    return series(
        lambda n: embed(x(n)) / n / (2 * math.cosh(2 * n * g) + sign),
        geometric(C, math.exp(-2 * g), -1),
    )


def axis_part(cA, cB, g: float):
    """sum_n cB(n)/n (sum_{v=1}^{k-1} cA(v)/(1 - e(v/k) e^(-2ng)) - sum_v cA(v))."""
    k = cA.modulus
    ta, tb = vals(cA), vals(cB)
    C0 = sum(ta[1:])
    q = math.exp(-2 * g)
    bound = geometric((k - 1) / (1 - q), q, -1)
    return series(
        lambda n: tb[n % k] / n * (sum(ta[v] / (1 - cmath.exp(2j * PI * v / k - 2 * n * g)) for v in range(1, k)) - C0),
        bound,
    )


@register("N9", "Gauss-sequence transformation, its imaginary-axis form and the cosh examples", NUM, _n9_domain, tolerance=1e-10)
def n9(p):
    form = p["form"]
    r3 = math.sqrt(3)
    if form == "cosh_minus":
        g = real(p["gamma"])
        s1, e1 = cosh_sum(g, -1, 6)
        s2, e2 = cosh_sum(PI**2 / (36 * g), -1, 6)
        return outcome(s1 + s2, PI / (2 * r3), e1 + e2)
    if form == "cosh_minus_symmetric":
        s1, e1 = cosh_sum(real(p["gamma"]), -1, 6)
        return outcome(s1, PI / (4 * r3), e1)
    if form == "cosh_plus":
        g = real(p["gamma"])
        s1, e1 = cosh_sum(g, 1, 3)
        s2, e2 = cosh_sum(PI**2 / (9 * g), 1, 3)
        return outcome(s1 + s2, PI / (9 * r3), e1 + e2)
    k = p["k"]
    c1, c2 = chi(k, p["i1"]), chi(k, p["i2"])
    G1, G2 = gauss_sequence(c1), gauss_sequence(c2)
    p1g = embed(periodic_P(1, 0, ramanujan_sequence(k)))
    if form == "axis":
        g = real(p["gamma"])
        th = PI**2 / (k * k * g)
        z = 1j * PI / (k * g)
        s1, e1 = axis_part(c1, c2, g)
        s2, e2 = axis_part(c2, c1, th)
        lhs = s1 - embed(c2(-1)) * s2
        delta = ramanujan_sum(k, 0) / k * p1g * log(z) if c1.is_principal else 0
        rhs = 1j * PI / k * embed(c1(-1) * periodic_P(1, 0, G1) * periodic_P(1, 0, G2)) + delta
        return outcome(lhs, rhs, e1 + e2)
    z = point(p["z"])
    a, b, c, d = p["V"]
    Vz, cz = (a * z + b) / (c * z + d), c * z + d
    tails: list[float] = []
    lhs = A0(Vz, gvals(c1), vals(c2), tails) - embed(c1.conj()(c) * c2.conj()(b)) * A0(z, gvals(c2), vals(c1), tails)
    delta = ramanujan_sum(k, 0) / k * p1g * log(cz) if c1.is_principal else 0
    rhs = 1j * PI / k * embed(c1.conj()(-c) * c2.conj()(b) * s_sum(d, c, G2, 1, G1, 1)) + delta
    return outcome(lhs, rhs, sum(tails))


# ---------------------------------------------------------------------------
# N10: the principal character mod 2 and the sech^2 sums


def _n10_domain():
    out = [{"form": "log", "gamma": g} for g in ("1/2", "1pi", "3")]
    out += [{"form": "sech2", "gamma": g} for g in ("1/2", "1pi", "3")]
    out.append({"form": "sech2_at_pi", "gamma": "1pi"})
    return out


def sech2_sum(g: float):
    # n counts from 1 here; sech^2(x) <= 4 e^(-2x)
    return series(
        lambda n: 1 / math.cosh((2 * n - 1) * g / 2) ** 2,
        geometric(4 * math.exp(g), math.exp(-2 * g)),
    )


@register("N10", "logarithmic relation for odd indices and the sech^2 sums", NUM, _n10_domain, tolerance=1e-10)
def n10(p):
    g = real(p["gamma"])
    th = PI**2 / g
    if p["form"] == "log":
        lo = min(g, th)

        def term(n):
            j = 2 * n - 1
            return (1 / (1 + math.exp(-j * g)) - 1 / (1 + math.exp(-j * th))) / j

        v, e = series(term, geometric(2 * math.exp(lo), math.exp(-2 * lo), -1))
        return outcome(v, (math.log(g) - math.log(th)) / 8, e)
    if p["form"] == "sech2_at_pi":
        v, e = sech2_sum(g)
        return outcome(v, 1 / (2 * PI), e)
    v1, e1 = sech2_sum(g)
    v2, e2 = sech2_sum(th)
    return outcome(g * v1 + th * v2, 1.0, g * e1 + th * e2)


# ---------------------------------------------------------------------------
# N11: alternating characters, and the examples built on them

ALT_MAPS = {
    4: ((0, -1, 1, 0), (4, 3, 5, 4), (4, 5, 3, 4)),
    6: ((0, -1, 1, 0), (6, 5, 7, 6)),
    8: ((0, -1, 1, 0), (8, 7, 9, 8)),
}


def s8_sides(p, half: bool):
    k, z = p["k"], point(p["z"])
    a, b, c, d = p["V"]
    c1, c2 = chi(k, p["i1"]), chi(k, p["i2"])
    c1b, c2b = c1.conj(), c2.conj()
    Vz, cz = (a * z + b) / (c * z + d), c * z + d
    tails: list[float] = []
    lhs = A0(Vz, altvals(c1), gvals(c2, k // 2), tails) - embed(c1(c) * c2(b)) * A0(z, altvals(c2), gvals(c1, k // 2), tails)
    t1 = 1j * PI * embed(c1(-c) * c2(b) * alternating_char_sum(d, c, c2, c1))
    t2 = -1j * PI / (c * cz) * embed(B_star(0, c2b) * B_star(2, c1b))
    t3 = -2j * PI / c * cz * embed(c2(-b) * B_star(0, c1b) * P_star(2, 0, c2b))
    scale = 0.5 if half else 1.0
    return lhs, t1 + scale * (t2 + t3), sum(tails)


def s81_sides(p, half: bool):
    k, g = p["k"], real(p["gamma"])
    c1, c2 = chi(k, p["i1"]), chi(k, p["i2"])
    c1b, c2b = c1.conj(), c2.conj()
    th = PI**2 / (k * k * g)

    def f(cA, cB, t):
        ta, tb = vals(cA), vals(cB)
        C, q = gauss_quotient_bound(k * t / PI, k)
        return series(
            lambda n: gx(n + k / 2, tb) * gx(1j * n * t * k / PI + k / 2, ta) / (n * (1 - math.exp(-2 * n * k * t))),
            geometric(k * C, q, -1),
        )

    s1, e1 = f(c1, c2, g)
    s2, e2 = f(c2, c1, th)
    lhs = s1 - embed(c2(-1)) * s2
    scale = 0.5 if half else 1.0
    rhs = 1j * PI * embed(P_star(1, 0, c2b) * P_star(1, 0, c1b)) + scale * (
        -k * g * embed(B_star(0, c2b) * B_star(2, c1b)) + th * k * embed(c2(-1) * B_star(0, c1b) * B_star(2, c2b))
    )
    return lhs, rhs, e1 + e2


def _s8_domain(principal_only: bool):
    out = []
    for k in (4, 6, 8):
        for c1, c2 in same_parity_pairs(k):
            if principal_only and not (c1.is_principal or c2.is_principal):
                continue
            for V in ALT_MAPS[k]:
                # at z = i the inversion makes the two B* terms cancel for principal pairs
                for z in Z_PTS[1:] if principal_only else Z_PTS:
                    out.append({"form": "s8", "k": k, "i1": c1.number, "i2": c2.number, "V": list(V), "z": z})
            for g in ("3/10", "11/10"):
                out.append({"form": "s8_1", "k": k, "i1": c1.number, "i2": c2.number, "gamma": g})
    return out


def _n11_domain():
    out = _s8_domain(False)
    out += [{"form": "k4_example", "gamma": g} for g in ("1pi", "4/5", "2")]
    out += [{"form": "k8_gauss", "gamma": g} for g in ("1/10", "3/10")]
    out += [{"form": "k8_sinh", "gamma": g} for g in ("3/10", "9/10", "1/2pi")]
    out += [{"form": "k6_example", "gamma": g} for g in ("2/5", "1/3pi")]
    return out


def k8_gauss_form(g: float):
    k = 8
    t = vals(principal_character(8))
    C, q = gauss_quotient_bound(k * g / PI, k)
    return series(
        lambda n: gx(n + 4, t) * gx(1j * n * g * k / PI + 4, t) / (n * (1 - math.exp(-2 * n * k * g))),
        geometric(k * C, q, -1),
    )


def sinh_sum(g: float, damp: float = 0.0):
    """sum (-1)^n e^(-damp n g)/(n sinh(2 n g))."""
    q = math.exp(-(2 + damp) * g)
    return series(
        lambda n: (-1) ** n * math.exp(-damp * n * g) / (n * math.sinh(2 * n * g)),
        geometric(2 / (1 - math.exp(-4 * g)), q, -1),
    )


def k6_sum(g: float):
    """sum (-1)^n sin(2 pi n/3) cosh(n g)/(n (2 cosh(2 n g) + 1))."""
    return series(
        lambda n: (-1) ** n * math.sin(2 * PI * n / 3) * math.cosh(n * g) / (n * (2 * math.cosh(2 * n * g) + 1)),
        geometric(1.0, math.exp(-g), -1),
    )


@register("N11", "alternating-character transformation and its examples", NUM, _n11_domain, tolerance=1e-10)
def n11(p):
    form = p["form"]
    if form == "s8":
        return outcome(*s8_sides(p, True))
    if form == "s8_1":
        return outcome(*s81_sides(p, True))
    g = real(p["gamma"])
    if form == "k4_example":
        s1, e1 = exp_cosh_sum(g)
        s2, e2 = exp_cosh_sum(PI**2 / g)
        return outcome(s1 + s2, PI / 8, e1 + e2)
    if form == "k8_gauss":
        th = PI**2 / (64 * g)
        s1, e1 = k8_gauss_form(g)
        s2, e2 = k8_gauss_form(th)
        return outcome(s1 - s2, (g - th) / 3, e1 + e2)
    if form == "k8_sinh":
        th = PI**2 / (4 * g)
        s1, e1 = sinh_sum(g)
        s2, e2 = sinh_sum(th)
        return outcome(s1 - s2, (g - th) / 6, e1 + e2)
    th = PI**2 / (9 * g)
    s1, e1 = k6_sum(g)
    s2, e2 = k6_sum(th)
    return outcome(s1 + s2, -PI / 9, e1 + e2)


def _x_s8(kind):
    return [c for c in _s8_domain(True) if c["form"] == kind]


@register("X_s8", "alternating transformation without the factor 1/2 on the B* terms", NUM, lambda: _x_s8("s8"), tolerance=1e-10, holds=False)
def x_s8(p):
    return outcome(*s8_sides(p, False))


@register("X_s8_1", "imaginary-axis alternating transformation without the factor 1/2", NUM, lambda: _x_s8("s8_1"), tolerance=1e-10, holds=False)
def x_s8_1(p):
    return outcome(*s81_sides(p, False))


@register(
    "X_k6_sign",
    "modulus 6 example with the printed value +pi/9",
    NUM,
    lambda: [{"gamma": g} for g in ("2/5", "1/3pi")],
    tolerance=1e-10,
    holds=False,
)
def x_k6_sign(p):
    g = real(p["gamma"])
    s1, e1 = k6_sum(g)
    s2, e2 = k6_sum(PI**2 / (9 * g))
    return outcome(s1 + s2, PI / 9, e1 + e2)


@register(
    "X_k8_simplified",
    "modulus 8 example in its printed e^(-12 n gamma) form",
    NUM,
    lambda: [{"gamma": g} for g in ("1/5", "3/10", "9/10")],
    tolerance=1e-10,
    holds=False,
)
def x_k8_simplified(p):
    g = real(p["gamma"])
    th = PI**2 / (4 * g)
    s1, e1 = sinh_sum(g, 12)
    s2, e2 = sinh_sum(th, 12)
    return outcome(s1 - s2, (g - th) / 3, e1 + e2)


# ---------------------------------------------------------------------------
# N12: L-values


def _n12_domain():
    rng = random.Random(20240611)
    thetas = ["0", "1", "-2", "1/2", "1/3", "-5/4", "7/3", "3/8", "-1/6", "5"]
    out = []
    for j in range(50):
        k = rng.randint(1, 6)
        lits = [str(F(rng.randint(-6, 6), rng.randint(1, 3))) for _ in range(k)]
        out.append({"form": "L0", "A": f"list:k={k};vals=" + ",".join(lits), "theta": thetas[j % len(thetas)]})
    out.append({"form": "gauss_P1_mod4"})
    for k in range(3, 13):
        for x in dirichlet_characters(k):
            if not x.is_primitive:
                continue
            for r in range(1, 5):
                if (-1) ** r == x.parity:
                    out.append({"form": "gauss_L", "k": k, "i": x.number, "r": r})
    return out


@register("N12", "L(0; A; theta) = P_1(-theta, A), and P_r(0, G) against L(r, chi)", NUM, _n12_domain, tolerance=1e-10)
def n12(p):
    form = p["form"]
    if form == "L0":
        A, th = seq(p["A"]), F(p["theta"])
        return outcome(periodic_L(0, A, 1, th), embed(periodic_P(1, -th, A)))
    if form == "gauss_P1_mod4":
        x = chi(4, 1)
        exact = periodic_P(1, 0, gauss_sequence(x))
        if exact != root_of_unity(4, 1):
            return NumericOutcome(math.inf)
        return outcome(embed(exact), -2 * (4 / (2j * PI)) * dirichlet_L(1, x))
    x = chi(p["k"], p["i"])
    k, r = x.modulus, p["r"]
    lhs = embed(periodic_P(r, 0, gauss_sequence(x)))
    return outcome(lhs, -2 * (k / (2j * PI)) ** r * dirichlet_L(r, x))


# ---------------------------------------------------------------------------
# N13: the loop integral


def _n13_domain():
    rng = random.Random(7)
    out = []
    for _ in range(20):
        k, c, d = rng.randint(1, 4), rng.randint(1, 4), rng.randint(-3, 5)
        z = [str(F(rng.randint(-10, 10), 10)), str(F(rng.randint(3, 20), 10))]
        out.append(
            {
                "z": z,
                "N": rng.randint(0, 3),
                "c": c,
                "d": d,
                "mu": rng.randrange(k),
                "v": rng.randrange(k),
                "j": rng.randint(1, c),
                "R1": str(F(rng.randint(-5, 5), rng.randint(1, 5))),
                "R2": str(F(rng.randint(-5, 5), rng.randint(1, 5))),
                "k": k,
            }
        )
    return out


@register("N13", "loop integral by residues against circle quadrature", NUM, _n13_domain, tolerance=1e-8)
def n13(p):
    args = (point(p["z"]), p["N"], p["c"], p["d"], p["mu"], p["v"], p["j"], F(p["R1"]), F(p["R2"]), p["k"])
    return outcome(loop_I_residue(*args), loop_I_quadrature(*args))


# ---------------------------------------------------------------------------
# N14: limits s -> 0 of the Gamma-weighted transformation

EPS = (1e-3, 5e-4)


def richardson(fun):
    """Limit at s = 0 of an even-symmetrized function sampled at +-eps."""
    parts = [fun(e) for e in EPS] + [fun(-e) for e in EPS]
    vals_ = [v for v, _ in parts]
    tails = [t for _, t in parts]
    avg = [(vals_[0] + vals_[2]) / 2, (vals_[1] + vals_[3]) / 2]
    # weights 4/3 and 1/3 on averages of two samples each
    tail = (tails[0] + tails[2]) / 6 + 2 * (tails[1] + tails[3]) / 3
    return (4 * avg[1] - avg[0]) / 3, tail


def gG(z, s, A, B, alpha=1, beta=1, r1=0, r2=0):
    bud = SeriesBudget(tail_bound_target=1e-13)
    v = gamma_G_via_fourier(z, s, A, B, alpha, beta, r1, r2, budget=bud)
    return v, bud.achieved_tail


LIMIT_SEQS = {
    2: ("list:k=2;vals=1,3", "list:k=2;vals=-2,5"),
    3: ("list:k=3;vals=1,3,-1", "list:k=3;vals=2,0,5"),
    4: ("char:k=4,i=1", "list:k=4;vals=1,2,0,-1"),
}
LIMIT_SHIFTS = (("0", "0"), ("1/2", "0"), ("0", "1/3"), ("-3/4", "5/7"), ("1", "2"))
LIMIT_Z = (I_PT, ["1/4", "1"])


def _n14_domain():
    out = []
    maps = {2: ((0, -1, 1, 0), (4, 5, 3, 4), (1, 0, 2, 1)), 3: ((3, 2, 4, 3), (1, 0, 3, 1))}
    for k, Vs in maps.items():
        for V in Vs:
            for z in LIMIT_Z:
                for r1, r2 in LIMIT_SHIFTS:
                    out.append({"form": "map", "k": k, "V": list(V), "z": z, "r1": r1, "r2": r2})
    for k in (2, 4):
        for alpha, beta in ((1, 1), (3, 1), (1, -1)):
            for z in LIMIT_Z:
                for r1, r2 in LIMIT_SHIFTS:
                    out.append({"form": "inversion", "k": k, "alpha": alpha, "beta": beta, "z": z, "r1": r1, "r2": r2})
    return out


def _limit_map(p):
    k = p["k"]
    A, B = (seq(s) for s in LIMIT_SEQS[k])
    a, b, c, d = p["V"]
    z = point(p["z"])
    r1, r2 = F(p["r1"]), F(p["r2"])
    R1, R2 = a * r1 + c * r2, b * r1 + d * r2
    Vz, cz = (a * z + b) / (c * z + d), c * z + d
    mean = lambda X: embed(X.mean())  # noqa: E731
    if a % k == 0 and d % k == 0:

        def fun(s):
            v1, t1 = gG(Vz, s, A, B, 1, 1, r1, r2)
            v2, t2 = gG(z, s, B, A, -b, -c, R1, R2)
            w = cpow(cz, -s)
            return w * v1 - v2, abs(w) * t1 + t2

        rhs = (
            2j * PI * embed(dedekind_kernel(d, c, B, b, A, c, R2, -R1))
            - 2j * PI / (c * cz) * mean(B) * embed(periodic_P(2, c * R2 - d * R1, A))
            - 2j * PI / c * cz * mean(A) * embed(periodic_P(2, R1, B, b))
        )
    elif b % k == 0 and c % k == 0:

        def fun(s):
            v1, t1 = gG(Vz, s, A, B, 1, 1, r1, r2)
            v2, t2 = gG(z, s, A, B, d, a, R1, R2)
            w = cpow(cz, -s)
            return w * v1 - v2, abs(w) * t1 + t2

        rhs = (
            2j * PI * embed(dedekind_kernel(d, c, A, -d, B, -a, R2, -R1))
            - 2j * PI / (c * cz) * mean(B) * embed(periodic_P(2, c * R2 - d * R1, A))
            - 2j * PI / c * cz * mean(B) * embed(periodic_P(2, -R1, A, d))
        )
    else:
        raise DomainError("the map needs a = d = 0 or b = c = 0 (mod k)")
    lim, tail = richardson(fun)
    return outcome(lim, rhs, tail)


def _limit_inversion(p):
    k = p["k"]
    A, B = (seq(s) for s in LIMIT_SEQS[k])
    alpha, beta = p["alpha"], p["beta"]
    z = point(p["z"])
    r1, r2 = F(p["r1"]), F(p["r2"])
    R1, R2 = r2, -r1

    def fun(s):
        v1, t1 = gG(-1 / z, s, B, A, -beta, -alpha, r1, r2)
        v2, t2 = gG(z, s, A, B, -alpha, beta, R1, R2)
        w = cpow(z, -s)
        return w * v1 - v2, abs(w) * t1 + t2

    rhs = 0j
    if R1.denominator == 1:
        rhs = -2j * PI * embed(A(alpha * int(R1))) * embed(periodic_P(1, R2, B, -beta))
    fl1, fl2 = math.floor(R1), math.floor(R2)
    for mu in range(k):
        for v in range(k):
            w = embed(A(alpha * (mu + 1 + fl1)) * B(-beta * (fl2 - v)))
            if w:
                rhs += w * loop_I_residue(z, 0, 1, 0, mu, v, 1, R1, R2, k)
    lim, tail = richardson(fun)
    return outcome(lim, rhs, tail)


@register("N14", "s -> 0 limit of the Gamma-weighted Eisenstein transformation", NUM, _n14_domain, tolerance=1e-5)
def n14(p):
    return _limit_map(p) if p["form"] == "map" else _limit_inversion(p)
