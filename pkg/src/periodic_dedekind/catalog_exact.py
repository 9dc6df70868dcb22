"""Exact identities: every residual is a cyclotomic number that must vanish.

Parameters are plain JSON values.  Sequences travel as spec strings
(``char:k=4,i=1``), characters as ``(k, i)`` index pairs and rational
shifts as strings such as ``"-3/4"``.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

from .bernoulli import (
    B_star,
    P_star,
    bernoulli_function_P,
    bernoulli_poly,
    euler_number,
    generating_series_B,
    periodic_B,
    periodic_P,
)
from .dedekind import (
    alternating_char_sum,
    auto_b,
    classical_s,
    hardy_s2,
    hardy_s3,
    s_sum,
)
from .errors import DomainError
from .exact import ZERO, Cyclotomic, root_of_unity, totient
from .identities import Mode, register
from .sequences import (
    PeriodicSequence,
    alternating_sequence,
    character,
    dirichlet_characters,
    fourier_hat,
    fourier_inverse,
    gauss_sequence,
    gauss_sum,
    make_sequence,
    ramanujan_sequence,
)

F = Fraction
P = periodic_P
EXACT = Mode.EXACT

REP_MODULI = (1, 2, 3, 4, 6)
SHIFTS = ("0", "1/2", "1/3", "-3/4", "5/7")


@lru_cache(maxsize=None)
def seq(spec: str) -> PeriodicSequence:
    return make_sequence(spec)


def chi(k: int, i: int):
    return character(k, i)


def first_nonzero(values) -> Cyclotomic:
    for v in values:
        v = Cyclotomic.coerce(v)
        if not v.is_zero():
            return v
    return ZERO


def n_chars(k: int) -> int:
    return len(dirichlet_characters(k))


def coprime_pairs(k: int, cmax: int, dmult: int):
    """(c, d) with 1 <= c <= cmax, d in {k, 2k, ..., dmult k}, gcd 1."""
    return [
        (c, d)
        for c in range(1, cmax + 1)
        for d in range(k, dmult * k + 1, k)
        if math.gcd(c, d) == 1
    ]


# ---------------------------------------------------------------------------
# sequence zoo for the reciprocity sweeps


def _random_list(k: int, seed: int) -> str:
    rng = random.Random(seed)
    lits = []
    for _ in range(k):
        p, q = rng.randint(-5, 5), rng.randint(1, 4)
        lits.append(str(F(p, q)))
    return f"list:k={k};vals=" + ",".join(lits)


@lru_cache(maxsize=None)
def zoo(k: int) -> tuple[str, ...]:
    """Characters, Gauss and Ramanujan sequences, alternating characters
    where the period stays k, the exponential sequence and three
    pseudorandom rational sequences; duplicates by value are dropped."""
    nc = n_chars(k)
    specs = [f"const:k={k}"]
    specs += [f"char:k={k},i={i}" for i in range(nc)]
    specs += [f"gauss:k={k},i={i}" for i in range(nc)]
    specs.append(f"ramanujan:k={k}")
    if k % 2 == 0:
        specs += [f"altchar:k={k},i={i}" for i in range(nc)]
    specs.append(f"exp:k={k}")
    specs += [_random_list(k, 7919 * k + j) for j in range(3)]
    seen, out = set(), []
    for s in specs:
        key = seq(s).values
        if key not in seen:
            seen.add(key)
            out.append(s)
    return tuple(out)


def _rep_domain(per_pair: int, salt: int, extra=None):
    out = []
    for k in REP_MODULI:
        specs = zoo(k)
        pairs = [(a, b) for a in specs for b in specs]
        random.Random(salt * 101 + k).shuffle(pairs)
        cursor = 0
        for c, d in coprime_pairs(k, 10, 6):
            for _ in range(per_pair):
                A, B = pairs[cursor % len(pairs)]
                cursor += 1
                base = {"k": k, "c": c, "d": d, "b": auto_b(d, c), "A": A, "B": B}
                for more in extra or [{}]:
                    out.append({**base, **more})
    return out


# ---------------------------------------------------------------------------
# E1: classical reciprocity


def _e1_domain():
    return [{"c": c, "d": d} for c in range(1, 51) for d in range(1, 51) if math.gcd(c, d) == 1]


def _coprime_positive(p):
    c, d = p["c"], p["d"]
    if not (isinstance(c, int) and isinstance(d, int) and c > 0 and d > 0):
        return f"c and d must be positive integers, got c={c!r}, d={d!r}"
    if math.gcd(c, d) != 1:
        return f"gcd(c, d) = 1 required, got c={c}, d={d}"
    return None


@register("E1", "classical Dedekind reciprocity", EXACT, _e1_domain, admits=_coprime_positive)
def e1(p):
    c, d = p["c"], p["d"]
    rhs = F(-1, 4) + F(1, 12) * (F(d, c) + F(c, d) + F(1, d * c))
    return classical_s(d, c) + classical_s(c, d) - rhs


# ---------------------------------------------------------------------------
# E2-E4: periodic reciprocity


def rep1_residual(A, B, c, d, b):
    lhs = s_sum(-c, d, A, c, B, -b) - s_sum(d, c, B, b, A, c)
    rhs = (
        P(1, 0, B, -b) * P(1, 0, A, -c)
        - F(d, c) * A.mean() * P(2, 0, B, b)
        - F(c, d) * B.mean() * P(2, 0, A, c)
        - F(1, 2 * d * c) * B.mean() * periodic_B(2, A)
    )
    return lhs - rhs


@register("E2", "periodic Dedekind reciprocity", EXACT, lambda: _rep_domain(4, 2))
def e2(p):
    return rep1_residual(seq(p["A"]), seq(p["B"]), p["c"], p["d"], p["b"])


def remark_residual(A, B, c, d, b):
    lhs = s_sum(c, d, A, c, B, b) + s_sum(d, c, B, b, A, c)
    rhs = (
        -P(1, 0, B, -b) * P(1, 0, A, -c)
        + F(1, 2 * d * c) * B.mean() * periodic_B(2, A)
        + F(d, c) * A.mean() * P(2, 0, B, b)
        + F(c, d) * B.mean() * P(2, 0, A, c)
        - A(0) * P(1, 0, B)
    )
    return lhs - rhs


def negation_residual(A, B, c, d, b):
    return s_sum(-c, d, A, c, B, -b) + s_sum(c, d, A, c, B, b) + A(0) * P(1, 0, B)


@register(
    "E3",
    "reciprocity in sum form, and the negated-argument relation",
    EXACT,
    lambda: _rep_domain(2, 3, [{"form": "sum"}, {"form": "negation"}]),
)
def e3(p):
    fn = remark_residual if p["form"] == "sum" else negation_residual
    return fn(seq(p["A"]), seq(p["B"]), p["c"], p["d"], p["b"])


def rep2_sides(A, B, c, d, b, R1, R2):
    lhs = s_sum(-c, d, A, c, B, -b, -R1, -R2) - s_sum(d, c, B, b, A, c, R2, -R1)
    shared = P(1, -R1, B, -b) * P(1, -R2, A, -c) - F(1, c * d) * B.mean() * P(2, c * R2 - d * R1, A)
    corrected = shared - F(d, c) * A.mean() * P(2, R1, B, b) - F(c, d) * B.mean() * P(2, R2, A, c)
    return lhs, shared, corrected


def _shift_grid():
    return [{"R1": r1, "R2": r2} for r1 in SHIFTS for r2 in SHIFTS]


@register("E4", "shifted reciprocity with rational shifts", EXACT, lambda: _rep_domain(1, 4, _shift_grid()))
def e4(p):
    lhs, _, rhs = rep2_sides(seq(p["A"]), seq(p["B"]), p["c"], p["d"], p["b"], F(p["R1"]), F(p["R2"]))
    return lhs - rhs


def _x_rep2_domain():
    # odd A against constant B with distinct shifts: the printed and true
    # right sides always differ here
    out = []
    for k in (3, 4, 5, 6):
        B = f"const:k={k}"
        for x in dirichlet_characters(k):
            if x.parity == 1:
                continue
            for c, d in coprime_pairs(k, 3, 2):
                for g in _shift_grid():
                    if g["R1"] != g["R2"]:
                        out.append({"k": k, "c": c, "d": d, "b": auto_b(d, c), "A": f"char:k={k},i={x.number}", "B": B, **g})
    return out


@register("X_rep2", "shifted reciprocity as printed (shifts interchanged)", EXACT, _x_rep2_domain, holds=False)
def x_rep2(p):
    A, B, c, d, b = seq(p["A"]), seq(p["B"]), p["c"], p["d"], p["b"]
    R1, R2 = F(p["R1"]), F(p["R2"])
    lhs, shared, _ = rep2_sides(A, B, c, d, b, R1, R2)
    printed = shared - F(d, c) * A.mean() * P(2, R2, B, -b) - F(c, d) * B.mean() * P(2, R1, A, c)
    return lhs - printed


# ---------------------------------------------------------------------------
# E5: constant sequences and character reciprocity


def _e5_domain():
    out = []
    for c in range(1, 13):
        for d in range(1, 13):
            if math.gcd(c, d) == 1:
                out.append({"form": "constant", "c": c, "d": d})
    for k in (2, 3, 4, 5, 6):
        nc = n_chars(k)
        for c, d in coprime_pairs(k, 5, 3):
            for i1 in range(nc):
                for i2 in range(nc):
                    out.append({"form": "characters", "k": k, "i1": i1, "i2": i2, "c": c, "d": d, "b": auto_b(d, c)})
    return out


@register("E5", "constant-sequence reduction and character reciprocity", EXACT, _e5_domain)
def e5(p):
    c, d = p["c"], p["d"]
    if p["form"] == "constant":
        I = seq("const:k=1")
        return first_nonzero(
            [
                s_sum(d, c, I, 1, I, 1) - classical_s(d, c) - F(1, 4),
                s_sum(-c, d, I, 1, I, 1) + classical_s(c, d) - F(1, 4),
            ]
        )
    x1, x2 = chi(p["k"], p["i1"]), chi(p["k"], p["i2"])
    b = p["b"]
    direct = s_sum(c, d, x1.seq, 1, x2.seq, 1)
    lhs = direct + s_sum(d, c, x2.seq, 1, x1.seq, 1)
    if x1.parity * x2.parity == -1:
        return first_nonzero([direct, lhs])
    B = lambda j, x: periodic_B(j, x.seq)  # noqa: E731
    rhs = (
        -B(1, x1) * B(1, x2)
        + (x1.conj()(c) * F(1, c) + c) * x2.conj()(b) * F(1, 2 * d) * B(0, x2) * B(2, x1)
        + F(d, 2 * c) * x1.conj()(c) * B(0, x1) * B(2, x2)
    )
    return lhs - rhs


# ---------------------------------------------------------------------------
# E6: character against Gauss sequence, and the k = 2 expressions


def _e6_domain():
    out = []
    for k in (2, 3, 4, 5, 6):
        chars = dirichlet_characters(k)
        for x1 in chars:
            for x2 in chars:
                if x1.is_principal != x2.is_principal:
                    continue
                for c, d in coprime_pairs(k, 5, 3):
                    for form in ("forward", "swapped"):
                        out.append({"form": form, "k": k, "i1": x1.number, "i2": x2.number, "c": c, "d": d})
    for c, d in coprime_pairs(2, 9, 10):
        out.append({"form": "k2_forward", "c": c, "d": d})
        out.append({"form": "k2_swapped", "c": c, "d": d})
    return out


@register("E6", "character and Gauss-sequence reciprocity with its k = 2 reductions", EXACT, _e6_domain)
def e6(p):
    c, d, form = p["c"], p["d"], p["form"]
    if form.startswith("k2"):
        x0, c2 = seq("principal:k=2"), seq("ramanujan:k=2")
        if form == "k2_forward":
            rhs = 2 * classical_s(c, 2 * d, require_coprime=False) - 3 * classical_s(c, d)
            rhs += classical_s(2 * c, d, require_coprime=False)
            return s_sum(c, d, x0, 1, c2, 1) - rhs
        rhs = hardy_s2(2 * d, 2 * c, require_coprime=False) - hardy_s2(d, 2 * c, require_coprime=False)
        return s_sum(d, c, c2, 1, x0, 1) - rhs
    x1, x2 = chi(p["k"], p["i1"]), chi(p["k"], p["i2"])
    G2 = gauss_sequence(x2)
    if form == "forward":
        lhs = s_sum(c, d, x1.seq, 1, G2, 1) + s_sum(d, c, G2, 1, x1.seq, 1)
    else:
        lhs = s_sum(c, d, G2, 1, x1.seq, 1) + s_sum(d, c, x1.seq, 1, G2, 1)
    if not x1.is_principal:
        return lhs + x1.parity * x2.parity * P(1, 0, x1.seq) * P(1, 0, G2)
    scale = F(d, c) if form == "forward" else (F(1, c) + c) * F(1, d)
    return lhs - scale * x1.seq.mean() * P(2, 0, G2)


# ---------------------------------------------------------------------------
# E7: Gauss against Gauss sequence


def _e7_domain():
    out = []
    for k in (2, 3, 4, 5, 6, 8):
        nc = n_chars(k)
        for c, d in coprime_pairs(k, 5, 3):
            out.append({"form": "principal", "k": k, "c": c, "d": d})
            for i1 in range(1, nc):
                for i2 in range(1, nc):
                    out.append({"form": "nonprincipal", "k": k, "i1": i1, "i2": i2, "c": c, "d": d})
    for c, d in coprime_pairs(2, 9, 10):
        out.append({"form": "k2", "c": c, "d": d})
    return out


@register("E7", "Gauss-sequence reciprocity, the totient-square value and the k = 2 relation", EXACT, _e7_domain)
def e7(p):
    c, d, form = p["c"], p["d"], p["form"]
    if form == "k2":
        c2 = seq("ramanujan:k=2")
        rhs = 2 * hardy_s2(d, 2 * c, require_coprime=False) - hardy_s2(2 * d, 2 * c, require_coprime=False)
        return s_sum(d, c, c2, 1, c2, 1) - rhs - F(1, 4)
    k = p["k"]
    if form == "principal":
        ck = ramanujan_sequence(k)
        return s_sum(c, d, ck, 1, ck, 1) + s_sum(d, c, ck, 1, ck, 1) - F(totient(k) ** 2, 4)
    G1, G2 = gauss_sequence(chi(k, p["i1"])), gauss_sequence(chi(k, p["i2"]))
    return s_sum(c, d, G1, 1, G2, 1) + s_sum(d, c, G2, 1, G1, 1) + P(1, 0, G1) * P(1, 0, G2)


# ---------------------------------------------------------------------------
# E8: alternating character sums


def _odd_b(d: int, c: int) -> int:
    b = auto_b(d, c)
    return b if b % 2 else b + d


def _e8_domain():
    out = []
    for k in (2, 4, 6, 8):
        nc = n_chars(k)
        for c, d in coprime_pairs(k, 7, 3):
            if c % 2 == 0:
                continue
            for i1 in range(nc):
                for i2 in range(nc):
                    form = "full"
                    out.append({"form": form, "k": k, "i1": i1, "i2": i2, "c": c, "d": d, "b": _odd_b(d, c)})
                    if i1 and i2:
                        out.append({"form": "nonprincipal", "k": k, "i1": i1, "i2": i2, "c": c, "d": d})
    return out


@register("E8", "alternating character-sum reciprocity", EXACT, _e8_domain)
def e8(p):
    c, d = p["c"], p["d"]
    x1, x2 = chi(p["k"], p["i1"]), chi(p["k"], p["i2"])
    lhs = alternating_char_sum(c, d, x1, x2) + x1.parity * x2.parity * alternating_char_sum(d, c, x2, x1)
    c1b, c2b = x1.conj(), x2.conj()
    head = -x2.parity * P_star(1, 0, c2b) * P_star(1, 0, c1b)
    if p["form"] == "nonprincipal":
        return lhs - head
    b = p["b"]
    rhs = (
        head
        + F(1, 2 * d * c) * c1b(-c) * c2b(-b) * B_star(0, c2b) * B_star(2, c1b)
        + F(d, c) * c1b(c) * B_star(0, c1b) * P_star(2, 0, c2b)
        + F(c, d) * x1.parity * c2b(-b) * B_star(0, c2b) * P_star(2, 0, c1b)
    )
    return lhs - rhs


# ---------------------------------------------------------------------------
# E9: exponential sequence against its transform


def _exp_pair(k: int):
    A = seq(f"exp:k={k}")
    return A, fourier_hat(A)


def exp_lhs(k: int, c: int, d: int) -> Cyclotomic:
    A, Ah = _exp_pair(k)
    b = auto_b(d, c)
    return s_sum(c, d, A, c, Ah, b) + s_sum(d, c, Ah, b, A, c)


def _e9_domain():
    out = []
    for k in (2, 3, 4, 6):
        for c, d in coprime_pairs(k, 7, 4):
            out.append({"form": "sum", "k": k, "c": c, "d": d})
    for c, d in coprime_pairs(2, 9, 8):
        for form in ("k2_value", "first_half", "second_half", "chain"):
            out.append({"form": form, "k": 2, "c": c, "d": d})
    return out


def _chain(c: int, d: int) -> Fraction:
    nc = dict(require_coprime=False)
    return (
        2 * classical_s(d, c)
        - classical_s(2 * d, c, **nc)
        + hardy_s2(2 * c, 2 * d, **nc)
        - hardy_s2(c, 2 * d, **nc)
        + hardy_s3(d // 2, c, **nc)
        - F(1, 2) * hardy_s3(d, c)
    )


@register("E9", "exponential-sequence reciprocity and its k = 2 Hardy-Berndt form", EXACT, _e9_domain)
def e9(p):
    k, c, d, form = p["k"], p["c"], p["d"], p["form"]
    A, Ah = _exp_pair(k)
    b = auto_b(d, c)
    value_k2 = F(1 + c * c, 8 * c * d)
    if form == "sum":
        return exp_lhs(k, c, d) - (
            -P(1, 0, Ah, -b) * P(1, 0, A, -c)
            + F(1, 2 * d * c) * Ah.mean() * periodic_B(2, A)
            + F(c, d) * Ah.mean() * P(2, 0, A, c)
            - A(0) * P(1, 0, Ah)
        )
    nc = dict(require_coprime=False)
    if form == "k2_value":
        return exp_lhs(2, c, d) - value_k2
    if form == "first_half":
        return s_sum(c, d, A, c, Ah, b) - (hardy_s2(2 * c, 2 * d, **nc) - hardy_s2(c, 2 * d, **nc))
    if form == "second_half":
        rhs = 2 * classical_s(d, c) + hardy_s3(d // 2, c, **nc) - classical_s(2 * d, c, **nc)
        return s_sum(d, c, Ah, b, A, c) - (rhs - F(1, 2) * hardy_s3(d, c))
    return _chain(c, d) - value_k2


def _i_cot(k: int, j: int) -> Cyclotomic:
    """(i/2) cot(pi j / k) in Q(zeta_k), for j not divisible by k."""
    zj = root_of_unity(k, j)
    return -(zj + 1) / ((zj - 1) * 2)


def _x_item6_domain():
    return [{"k": k, "c": c, "d": d} for k in (3, 4, 6) for c, d in coprime_pairs(k, 7, 3) if c % k]


@register("X_item6", "exponential-sequence reciprocity in its printed closed form", EXACT, _x_item6_domain, holds=False)
def x_item6(p):
    k, c, d = p["k"], p["c"], p["d"]
    t = F(c, k)
    printed = -bernoulli_function_P(1, t) * (F(1, 2) + _i_cot(k, c)) + F(d, c) * bernoulli_function_P(2, t)
    return exp_lhs(k, c, d) - printed


def _k2_domain():
    return [{"c": c, "d": d} for c, d in coprime_pairs(2, 9, 8)]


@register("X_52", "exponential-sequence reciprocity at k = 2, printed value -d/(24c)", EXACT, _k2_domain, holds=False)
def x_52(p):
    return exp_lhs(2, p["c"], p["d"]) + F(p["d"], 24 * p["c"])


@register("X_chain", "Hardy-Berndt chain with the printed value -d/(24c)", EXACT, _k2_domain, holds=False)
def x_chain(p):
    return _chain(p["c"], p["d"]) + F(p["d"], 24 * p["c"])


# ---------------------------------------------------------------------------
# E10: Bernoulli function structure


def _e10_domain():
    out = []
    grid = ["0", "1", "-2", "1/2", "1/3", "-5/4", "7/6", "13/5"]
    for n in range(7):
        for r in range(1, 9):
            for x in grid:
                out.append({"form": "raabe", "n": n, "r": r, "x": x})
        for x in grid:
            out.append({"form": "reflection", "n": n, "x": x})
    for k in (1, 2, 3, 4, 6):
        for spec in zoo(k):
            for r in (0, 2, 3, 4, 5):
                out.append({"form": "P_at_zero", "A": spec, "r": r})
            out.append({"form": "generating_series", "A": spec})
        for spec in (f"exp:k={k}", f"ramanujan:k={k}", zoo(k)[-1]):
            for c, d in coprime_pairs(k, 7, 3):
                for r in range(5):
                    out.append({"form": "cosets", "A": spec, "c": c, "d": d, "r": r})
    for k in range(2, 9):
        for i in range(n_chars(k)):
            out.append({"form": "vanishing", "k": k, "i": i})
    for m in range(1, 17):
        out.append({"form": "quarter", "m": m})
    return out


@register("E10", "Bernoulli function structure: multiplication, reflection, cosets, vanishing", EXACT, _e10_domain)
def e10(p):
    form = p["form"]
    if form == "raabe":
        n, r, x = p["n"], p["r"], F(p["x"])
        # holds at integers too, thanks to P_1 = -1/2 there
        lhs = bernoulli_function_P(n, x)
        return lhs - F(r) ** (n - 1) * sum((bernoulli_function_P(n, (m + x) / r) for m in range(r)), F(0))
    if form == "reflection":
        n, x = p["n"], F(p["x"])
        if n == 1 and x.denominator == 1:
            return first_nonzero([bernoulli_function_P(1, -x) + F(1, 2), bernoulli_function_P(1, x) + F(1, 2)])
        return bernoulli_function_P(n, -x) - (-1) ** n * bernoulli_function_P(n, x)
    if form == "P_at_zero":
        A, r = seq(p["A"]), p["r"]
        return P(r, 0, A) - F((-1) ** r, math.factorial(r)) * periodic_B(r, A)
    if form == "generating_series":
        A = seq(p["A"])
        series = generating_series_B(A, 8)
        return first_nonzero(series[j] - periodic_B(j, A) / math.factorial(j) for j in range(9))
    if form == "cosets":
        A, c, d, r = seq(p["A"]), p["c"], p["d"], p["r"]
        lhs = sum((P(r, F(d * j, c), A, c) for j in range(1, c + 1)), ZERO)
        return lhs - F(c) ** (1 - r) * P(r, 0, A)
    if form == "vanishing":
        x = chi(p["k"], p["i"])
        vals = []
        for m in range(4):
            if x.parity == 1:
                vals.append(periodic_B(2 * m + 1, x.seq))
            else:
                vals.append(periodic_B(2 * m, x.seq))
        if not x.is_principal:
            vals.append(periodic_B(0, x.seq))
        return first_nonzero(vals)
    if form == "quarter":
        m = p["m"]
        rhs = F(1, 2**m) * bernoulli_poly(m, F(1, 2)) - F(m, 4**m) * euler_number(m - 1)
        return bernoulli_poly(m, F(1, 4)) - rhs
    raise DomainError(f"unknown E10 form {form!r}")


# ---------------------------------------------------------------------------
# E11: alternating and Gauss-sequence bookkeeping


def _e11_domain():
    out = []
    for k in (2, 4, 6, 8):
        nc = n_chars(k)
        for i in range(nc):
            for cc in (1, 3, 5, -1, 7):
                out.append({"form": "alternating_P", "k": k, "i": i, "c": cc})
        for c, d in coprime_pairs(k, 7, 3):
            if c % 2 == 0:
                continue
            for i1 in range(nc):
                for i2 in range(nc):
                    out.append({"form": "alternating_sum", "k": k, "i1": i1, "i2": i2, "c": c, "d": d, "b": _odd_b(d, c)})
    for k in range(2, 11):
        for i in range(n_chars(k)):
            for form in ("gauss_P1", "transform", "gauss_scaling"):
                out.append({"form": form, "k": k, "i": i})
            if k % 2 == 0:
                out.append({"form": "alternating_transform", "k": k, "i": i})
        out.append({"form": "ramanujan_P1", "k": k})
    return out


@register("E11", "alternating Bernoulli functions, Gauss sequences and the cotangent form", EXACT, _e11_domain)
def e11(p):
    form = p["form"]
    if form == "alternating_P":
        x = chi(p["k"], p["i"])
        A, c = alternating_sequence(x), p["c"]
        return first_nonzero(
            P(m, t, A, c) - x(-c) * P_star(m, t, x.conj())
            for m in range(4)
            for t in (F(0), F(1, 3), F(-5, 2))
        )
    if form == "alternating_sum":
        x1, x2 = chi(p["k"], p["i1"]), chi(p["k"], p["i2"])
        c, d, b = p["c"], p["d"], p["b"]
        A, B = alternating_sequence(x1), alternating_sequence(x2)
        return s_sum(d, c, B, b, A, c) - x1(-c) * x2(b) * alternating_char_sum(d, c, x2, x1)
    if form == "ramanujan_P1":
        k = p["k"]
        return P(1, 0, ramanujan_sequence(k)) + F(totient(k), 2)
    k = p["k"]
    x = chi(k, p["i"])
    G = gauss_sequence(x)
    if form == "gauss_P1":
        p1 = P(1, 0, G)
        geometric = sum((x(j) / (root_of_unity(k, -j) - 1) for j in range(1, k)), ZERO)
        cot = sum((x(j) * _i_cot(k, j) for j in range(1, k)), ZERO)
        cot = cot - sum((x(j) for j in range(1, k)), ZERO) * F(1, 2)
        vals = [p1 - geometric, p1 - cot]
        if x.parity == 1 and not x.is_principal:
            vals.append(p1)
        if k == 4 and x.number == 1:
            vals.append(p1 - root_of_unity(4, 1))
        return first_nonzero(vals)
    if form == "transform":
        h = fourier_hat(x.seq)
        return first_nonzero(
            [h(n) - gauss_sum(-n, x) / k for n in range(k)] + [h(n) - x(-1) * G(n) / k for n in range(k)]
        )
    if form == "gauss_scaling":
        return first_nonzero(
            G(a * n) - x.conj()(a) * G(n) for a in range(1, k) if math.gcd(a, k) == 1 for n in range(k)
        )
    if form == "alternating_transform":
        h = fourier_hat(alternating_sequence(x))
        vals = [h(n) - x(-1) * gauss_sum(n + k // 2, x) / k for n in range(k)]
        vals += [
            gauss_sum(a * n + k // 2, x) - x.conj()(a) * gauss_sum(n + k // 2, x)
            for a in range(1, k)
            if math.gcd(a, k) == 1
            for n in range(k)
        ]
        return first_nonzero(vals)
    raise DomainError(f"unknown E11 form {form!r}")


# ---------------------------------------------------------------------------
# E12: finite Fourier transform


def _e12_domain():
    out = []
    for k in range(1, 9):
        for spec in zoo(k) if k in REP_MODULI else (f"exp:k={k}", f"ramanujan:k={k}", _random_list(k, k)):
            out.append({"A": spec})
    return out


@register("E12", "finite Fourier coefficients and their inversion", EXACT, _e12_domain)
def e12(p):
    A = seq(p["A"])
    k = A.period
    h = fourier_hat(A)
    back = fourier_inverse(h)
    hh = fourier_hat(h)
    return first_nonzero(
        [back(n) - A(n) for n in range(k)] + [hh(n) * k - A(-n) for n in range(k)]
    )
