"""Periodic sequences, Dirichlet characters, Gauss and Ramanujan sums."""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import DomainError, ParseError
from .exact import (
    ONE,
    ZERO,
    Cyclotomic,
    _check_capacity,
    factorize,
    mobius,
    parse_literal,
    root_of_unity,
    totient,
)


@dataclass(frozen=True, eq=False)
class PeriodicSequence:
    """f(0), ..., f(k-1) extended to all integers with period k."""

    period: int
    values: tuple[Cyclotomic, ...]
    tags: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.period < 1:
            raise DomainError("period must be positive")
        vals = tuple(Cyclotomic.coerce(v) for v in self.values)
        if len(vals) != self.period:
            raise DomainError(f"expected {self.period} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    def __call__(self, n: int) -> Cyclotomic:
        return self.values[n % self.period]

    def __eq__(self, other):
        if not isinstance(other, PeriodicSequence):
            return NotImplemented
        return self.period == other.period and self.values == other.values

    def __hash__(self):
        return hash((self.period, self.values))

    def __repr__(self):
        name = self.tags.get("spec")
        vals = ", ".join(str(v) for v in self.values)
        return f"PeriodicSequence({name or self.period}: [{vals}])"

    @property
    def k(self) -> int:
        return self.period

    def mean(self) -> Cyclotomic:
        """B_0(A) = (1/k) sum f(m)."""
        return sum(self.values, ZERO) / self.period

    def map(self, fn: Callable[[Cyclotomic], Cyclotomic]) -> "PeriodicSequence":
        return PeriodicSequence(self.period, tuple(fn(v) for v in self.values))

    def scale(self, alpha: int) -> "PeriodicSequence":
        return scale_index(self, alpha)

    def hat(self) -> "PeriodicSequence":
        return fourier_hat(self)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)


def constant(k: int, value=1) -> PeriodicSequence:
    return PeriodicSequence(k, (Cyclotomic.coerce(value),) * k, {"spec": f"const:k={k}"})


def scale_index(seq: PeriodicSequence, alpha: int) -> PeriodicSequence:
    """A_alpha = {f(alpha n)}; alpha need not be a unit mod k."""
    k = seq.period
    return PeriodicSequence(k, tuple(seq(alpha * n) for n in range(k)))


def fourier_hat(seq: PeriodicSequence) -> PeriodicSequence:
    """Finite Fourier coefficients f^(n) = (1/k) sum_j f(j) e(-nj/k)."""
    k = seq.period
    roots = [root_of_unity(k, -j) for j in range(k)]
    out = []
    for n in range(k):
        acc = ZERO
        for j in range(k):
            fj = seq.values[j]
            if fj:
                acc = acc + fj * roots[(n * j) % k]
        out.append(acc / k)
    return PeriodicSequence(k, tuple(out))


def fourier_inverse(hat: PeriodicSequence) -> PeriodicSequence:
    """f(n) = sum_j f^(j) e(nj/k)."""
    k = hat.period
    roots = [root_of_unity(k, j) for j in range(k)]
    out = []
    for n in range(k):
        acc = ZERO
        for j in range(k):
            if hat.values[j]:
                acc = acc + hat.values[j] * roots[(n * j) % k]
        out.append(acc)
    return PeriodicSequence(k, tuple(out))


# ---------------------------------------------------------------------------
# Dirichlet characters


def _primitive_root(q: int, p: int) -> int:
    phi = totient(q)
    primes = [r for r, _ in factorize(phi)]
    for g in range(2, q):
        if g % p and all(pow(g, phi // r, q) != 1 for r in primes):
            return g
    raise ArithmeticError(f"no primitive root mod {q}")


@lru_cache(maxsize=None)
def unit_group(k: int) -> tuple[tuple[int, int], ...]:
    """Fixed generators of (Z/kZ)^* as (generator mod k, order) pairs.

    Odd prime powers use their least primitive root, 4 uses -1, 2^e (e >= 3)
    uses -1 and 5; local generators are lifted by CRT (1 on other factors).
    """
    comps = []
    for p, e in factorize(k):
        q = p**e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                comps.append((q, 3, 2))
            else:
                comps.append((q, q - 1, 2))
                comps.append((q, 5, 2 ** (e - 2)))
        else:
            comps.append((q, _primitive_root(q, p), totient(q)))
    gens = []
    for q, g, o in comps:
        rest = k // q
        # x = g mod q, x = 1 mod rest
        x = g if rest == 1 else (g * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % k
        gens.append((x % k if k > 1 else 0, o))
    return tuple(gens)


@lru_cache(maxsize=None)
def _discrete_logs(k: int) -> dict[int, tuple[int, ...]]:
    gens = unit_group(k)
    logs = {}
    for ts in itertools.product(*[range(o) for _, o in gens]):
        x = 1 % k
        for (g, _), t in zip(gens, ts):
            x = x * pow(g, t, k) % k
        logs[x] = ts
    if k == 1:
        logs = {0: ()}
    return logs


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    modulus: int
    index: tuple[int, ...]
    number: int
    seq: PeriodicSequence

    def __call__(self, n: int) -> Cyclotomic:
        return self.seq(n)

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.modulus == other.modulus and self.index == other.index

    def __hash__(self):
        return hash((self.modulus, self.index))

    def __repr__(self):
        return f"DirichletCharacter(k={self.modulus}, i={self.number})"

    @property
    def is_principal(self) -> bool:
        return not any(self.index)

    @property
    def parity(self) -> int:
        """chi(-1) as +1 or -1."""
        return 1 if self(-1) == ONE else -1

    @property
    def is_even(self) -> bool:
        return self.parity == 1

    @property
    def is_primitive(self) -> bool:
        k = self.modulus
        if k == 1:
            return True
        for p, _ in factorize(k):
            d = k // p
            induced = all(
                self(n) == ONE for n in range(1, k) if math.gcd(n, k) == 1 and n % d == 1 % d
            )
            if induced:
                return False
        return True

    def conj(self) -> "DirichletCharacter":
        orders = [o for _, o in unit_group(self.modulus)]
        idx = tuple((-a) % o for a, o in zip(self.index, orders))
        return character(self.modulus, _index_number(idx, orders))


def _index_number(idx: Sequence[int], orders: Sequence[int]) -> int:
    n = 0
    for a, o in zip(idx, orders):
        n = n * o + a
    return n


@lru_cache(maxsize=None)
def dirichlet_characters(k: int) -> tuple[DirichletCharacter, ...]:
    """All phi(k) characters mod k, lexicographic in the exponent vector."""
    if k < 1:
        raise DomainError("modulus must be positive")
    _check_capacity(k)
    gens = unit_group(k)
    orders = [o for _, o in gens]
    expo = math.lcm(*orders) if orders else 1
    logs = _discrete_logs(k)
    out = []
    for number, idx in enumerate(itertools.product(*[range(o) for o in orders])):
        vals = []
        for n in range(k):
            ts = logs.get(n)
            if ts is None:
                vals.append(ZERO)
            else:
                e = sum(a * t * (expo // o) for a, t, o in zip(idx, ts, orders))
                vals.append(root_of_unity(expo, e))
        seq = PeriodicSequence(k, tuple(vals), {"spec": f"char:k={k},i={number}"})
        out.append(DirichletCharacter(k, tuple(idx), number, seq))
    return tuple(out)


def character(k: int, i: int) -> DirichletCharacter:
    chars = dirichlet_characters(k)
    if not 0 <= i < len(chars):
        raise DomainError(f"character index {i} out of range for modulus {k} ({len(chars)} characters)")
    return chars[i]


def principal_character(k: int) -> DirichletCharacter:
    return character(k, 0)


def gauss_sum(n: int, chi: DirichletCharacter) -> Cyclotomic:
    """G(n, chi) = sum_v chi(v) e(nv/k)."""
    k = chi.modulus
    acc = ZERO
    for v in range(k):
        c = chi(v)
        if c:
            acc = acc + c * root_of_unity(k, n * v)
    return acc


def ramanujan_sum(k: int, n: int) -> Fraction:
    """c_k(n) via the Mobius closed form."""
    g = math.gcd(n, k)
    return Fraction(mobius(k // g) * totient(k) // totient(k // g))


def gauss_sequence(chi: DirichletCharacter) -> PeriodicSequence:
    k = chi.modulus
    return PeriodicSequence(
        k, tuple(gauss_sum(n, chi) for n in range(k)), {"spec": f"gauss:k={k},i={chi.number}"}
    )


def gauss_shift_sequence(chi: DirichletCharacter) -> PeriodicSequence:
    """{G(n + k/2, chi)}, even k only."""
    k = chi.modulus
    if k % 2:
        raise DomainError(f"shifted Gauss sequence needs even modulus, got k={k}")
    return PeriodicSequence(
        k,
        tuple(gauss_sum(n + k // 2, chi) for n in range(k)),
        {"spec": f"gauss_shift:k={k},i={chi.number}"},
    )


def ramanujan_sequence(k: int) -> PeriodicSequence:
    return PeriodicSequence(
        k, tuple(Cyclotomic.rational(ramanujan_sum(k, n)) for n in range(k)), {"spec": f"ramanujan:k={k}"}
    )


def alternating_sequence(chi: DirichletCharacter) -> PeriodicSequence:
    """{(-1)^n chi(n)} with its honest period h (k if k even, else 2k)."""
    k = chi.modulus
    h = k if k % 2 == 0 else 2 * k
    vals = tuple(chi(n) if n % 2 == 0 else -chi(n) for n in range(h))
    return PeriodicSequence(h, vals, {"spec": f"altchar:k={k},i={chi.number}"})


def exponential_sequence(k: int) -> PeriodicSequence:
    return PeriodicSequence(k, tuple(root_of_unity(k, n) for n in range(k)), {"spec": f"exp:k={k}"})


# ---------------------------------------------------------------------------
# sequence-spec grammar


def _split_outer(text: str) -> str:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"expected parenthesised spec, got {text!r}")
    depth = 0
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i != len(text) - 1:
            raise ParseError(f"unbalanced parentheses in {text!r}")
    return text[1:-1]


_KV = re.compile(r"^\s*([a-z]+)\s*=\s*(-?\d+)\s*$")


def _params(text: str, required: Sequence[str]) -> dict[str, int]:
    out = {}
    for part in text.split(","):
        mt = _KV.match(part)
        if not mt:
            raise ParseError(f"bad parameter {part!r}")
        out[mt.group(1)] = int(mt.group(2))
    if set(out) != set(required):
        raise ParseError(f"expected parameters {sorted(required)}, got {sorted(out)}")
    if out["k"] < 1:
        raise ParseError("k must be positive")
    return out


def make_sequence(spec: str) -> PeriodicSequence:
    """Build a sequence from its textual spec, e.g. ``char:k=4,i=1``."""
    spec = spec.strip()
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ParseError(f"missing ':' in sequence spec {spec!r}")
    if kind == "dft":
        seq = fourier_hat(make_sequence(_split_outer(rest)))
    elif kind == "scale":
        alpha, sep, inner = rest.partition(":")
        if not sep:
            raise ParseError(f"bad scale spec {spec!r}")
        try:
            a = int(alpha)
        except ValueError:
            raise ParseError(f"bad scale factor {alpha!r}") from None
        seq = scale_index(make_sequence(_split_outer(inner)), a)
    elif kind == "list":
        head, sep, vals = rest.partition(";")
        if not sep or not vals.strip().startswith("vals="):
            raise ParseError(f"bad list spec {spec!r}")
        k = _params(head, ["k"])["k"]
        lits = [v for v in vals.strip()[5:].split(",")]
        if len(lits) != k:
            raise ParseError(f"list spec needs {k} values, got {len(lits)}")
        seq = PeriodicSequence(k, tuple(parse_literal(v) for v in lits))
    elif kind in ("const", "principal", "ramanujan", "exp"):
        k = _params(rest, ["k"])["k"]
        seq = {
            "const": lambda: constant(k),
            "principal": lambda: principal_character(k).seq,
            "ramanujan": lambda: ramanujan_sequence(k),
            "exp": lambda: exponential_sequence(k),
        }[kind]()
    elif kind in ("char", "gauss", "gauss_shift", "altchar"):
        p = _params(rest, ["k", "i"])
        chi = character(p["k"], p["i"])
        seq = {
            "char": lambda: chi.seq,
            "gauss": lambda: gauss_sequence(chi),
            "gauss_shift": lambda: gauss_shift_sequence(chi),
            "altchar": lambda: alternating_sequence(chi),
        }[kind]()
    else:
        raise ParseError(f"unknown sequence kind {kind!r}")
    return PeriodicSequence(seq.period, seq.values, {**seq.tags, "spec": spec})
