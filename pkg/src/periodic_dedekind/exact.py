"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, z, ..., z^(phi(m)-1) modulo the
m-th cyclotomic polynomial, with ``fractions.Fraction`` coefficients.  Mixed
orders are promoted to the lcm order before any binary operation.
"""

from __future__ import annotations

import cmath
import contextlib
import contextvars
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .errors import CapacityError, DomainError, ParseError

DEFAULT_MAX_ORDER = 360

_max_order: contextvars.ContextVar[int] = contextvars.ContextVar(
    "max_order", default=DEFAULT_MAX_ORDER
)


def max_order() -> int:
    return _max_order.get()


@contextlib.contextmanager
def order_cap(limit: int) -> Iterator[None]:
    """Temporarily change the cyclotomic order cap in the current context."""
    if limit < 1:
        raise ValueError("order cap must be positive")
    token = _max_order.set(limit)
    try:
        yield
    finally:
        _max_order.reset(token)


def _check_capacity(m: int) -> None:
    if m < 1:
        raise DomainError(f"cyclotomic order must be positive, got {m}")
    if m > _max_order.get():
        raise CapacityError(f"cyclotomic order {m} exceeds cap {_max_order.get()}")


# ---------------------------------------------------------------------------
# small integer helpers


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of a positive integer, ascending primes."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def totient(n: int) -> int:
    r = n
    for p, _ in factorize(n):
        r -= r // p
    return r


def mobius(n: int) -> int:
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_exact_div(num: Sequence[int], den: Sequence[int]) -> list[int]:
    # den is monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def _cyclo(m: int) -> tuple[int, ...]:
    num = [-1] + [0] * (m - 1) + [1]
    den = [1]
    for d in divisors(m)[:-1]:
        den = _poly_mul(den, _cyclo(d))
    return tuple(_poly_exact_div(num, den))


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    _check_capacity(m)
    return _cyclo(m)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds x^e mod Phi_m for e = 0..m-1 as a length-phi(m) vector."""
    phi = _cyclo(m)
    n = len(phi) - 1
    rows = []
    cur = [0] * n
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x and reduce with x^n = -sum phi_i x^i
        top = cur[-1] if n else 0
        cur = [0] + cur[:-1]
        if top:
            for i in range(n):
                cur[i] -= top * phi[i]
    return tuple(rows)


# ---------------------------------------------------------------------------
# field elements

Number = Union[int, Fraction, "Cyclotomic"]

_ZERO = Fraction(0)


class Cyclotomic:
    """An element of Q(zeta_m); immutable.

    Rational elements are always normalised to order 1, so ``order`` is a
    field the element lives in, not necessarily the smallest one.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence):
        _check_capacity(order)
        cs = tuple(Fraction(c) for c in coeffs)
        n = len(_cyclo(order)) - 1
        if len(cs) != n:
            raise ValueError(f"order {order} needs {n} coefficients, got {len(cs)}")
        if order > 1 and not any(cs[1:]):
            order, cs = 1, cs[:1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    def __reduce__(self):
        return (Cyclotomic, (self.order, self.coeffs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        return cls(1, (q,))

    @classmethod
    def coerce(cls, x: Number) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(1, (x,))
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    @classmethod
    def _from_exponents(cls, m: int, terms) -> "Cyclotomic":
        """Build sum of a * zeta_m^e from (e, a) pairs."""
        table = _power_table(m)
        acc = [_ZERO] * (len(table[0]))
        for e, a in terms:
            if a:
                for i, t in enumerate(table[e % m]):
                    if t:
                        acc[i] += a * t
        return cls(m, acc)

    # -- structure ----------------------------------------------------------

    def promote(self, m: int) -> "Cyclotomic":
        """Same element, represented in Q(zeta_m); requires order | m."""
        if m % self.order:
            raise ValueError(f"cannot promote order {self.order} to {m}")
        if m == self.order:
            return self
        _check_capacity(m)
        step = m // self.order
        return Cyclotomic._from_exponents(m, ((j * step, a) for j, a in enumerate(self.coeffs)))

    def _terms(self):
        return ((j, a) for j, a in enumerate(self.coeffs) if a)

    def is_rational(self) -> bool:
        return self.order == 1

    def to_fraction(self) -> Fraction:
        if self.order != 1:
            raise DomainError(f"{self} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return self.order == 1 and not self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _common(x: "Cyclotomic", y: "Cyclotomic"):
        if x.order == y.order:
            return x, y
        m = math.lcm(x.order, y.order)
        return x.promote(m), y.promote(m)

    def __add__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        if other.order == 1:
            if not other.coeffs[0]:
                return self
            cs = list(self.coeffs)
            cs[0] += other.coeffs[0]
            return Cyclotomic(self.order, cs)
        if self.order == 1:
            return other + self
        a, b = self._common(self, other)
        return Cyclotomic(a.order, [p + q for p, q in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q) -> "Cyclotomic":
        q = Fraction(q)
        if not q:
            return ZERO
        return Cyclotomic(self.order, [c * q for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.order == 1:
            return self.scale(other.coeffs[0])
        if self.order == 1:
            return other.scale(self.coeffs[0])
        a, b = self._common(self, other)
        m = a.order
        conv = {}
        for i, p in a._terms():
            for j, q in b._terms():
                conv[i + j] = conv.get(i + j, _ZERO) + p * q
        return Cyclotomic._from_exponents(m, conv.items())

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise DomainError("inversion of zero")
        if self.order == 1:
            return Cyclotomic(1, (1 / self.coeffs[0],))
        m = self.order
        phi = [Fraction(c) for c in _cyclo(m)]
        u = _poly_inverse_mod(list(self.coeffs), phi)
        return Cyclotomic(m, u)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DomainError("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def galois(self, a: int) -> "Cyclotomic":
        """Apply the automorphism zeta_m -> zeta_m^a, gcd(a, m) = 1."""
        m = self.order
        if math.gcd(a, m) != 1:
            raise DomainError(f"{a} is not a unit mod {m}")
        return Cyclotomic._from_exponents(m, ((j * a, c) for j, c in self._terms()))

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # normalised trace to Q is invariant under promotion
        if self.order == 1:
            return hash(self.coeffs[0])
        m = self.order
        tr = Fraction(0)
        for j, a in self._terms():
            g = m // math.gcd(j, m)
            mu = mobius(g)
            if mu:
                tr += a * Fraction(mu, totient(g))
        return hash(tr)

    # -- numerics & text ----------------------------------------------------

    def __complex__(self):
        return embed(self)

    def __repr__(self):
        return f"Cyclotomic({format_literal(self)!r})"

    def __str__(self):
        return format_literal(self)


def _poly_trim(p: list) -> list:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list, b: list):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return q, _poly_trim(a[: len(b) - 1] or [Fraction(0)])


def _poly_sub_mul(a: list, q: list, b: list) -> list:
    out = [Fraction(0)] * max(len(a), len(q) + len(b) - 1)
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _poly_trim(out)


def _poly_inverse_mod(a: list, mod: list) -> list:
    """Inverse of a modulo the irreducible polynomial ``mod`` (extended Euclid)."""
    r0, r1 = _poly_trim(list(mod)), _poly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1 or r1[0]:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
        if len(r0) == 1:
            break
    # r0 is a nonzero constant
    c = r0[0]
    n = len(mod) - 1
    _, inv = _poly_divmod([x / c for x in s0], mod)
    inv = inv + [Fraction(0)] * (n - len(inv))
    return inv[:n]


ZERO = Cyclotomic(1, (0,))
ONE = Cyclotomic(1, (1,))


def root_of_unity(m: int, j: int = 1) -> Cyclotomic:
    """e(j/m), stored at the smallest order m/gcd(j, m)."""
    _check_capacity(m)
    j %= m
    g = math.gcd(j, m)
    m, j = m // g, j // g
    return Cyclotomic._from_exponents(m, ((j, Fraction(1)),))


def embed(x: Number, target: complex | None = None) -> complex:
    """Complex value of x, evaluating the power basis at e^(2 pi i / m).

    ``target`` is accepted for interface symmetry and ignored.
    """
    x = Cyclotomic.coerce(x)
    m = x.order
    total = 0j
    for j, a in x._terms():
        total += float(a) * cmath.exp(2j * math.pi * j / m)
    return total


def as_cyclotomic(x: Number) -> Cyclotomic:
    return Cyclotomic.coerce(x)


# ---------------------------------------------------------------------------
# literal syntax:  p/q,  z{m}^{j},  + - * and parentheses


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_literal(x: Number) -> str:
    x = Cyclotomic.coerce(x)
    if x.is_zero():
        return "0"
    parts = []
    for j, a in x._terms():
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if j == 0:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = f"z{x.order}^{j}"
        else:
            body = f"{_fmt_rational(mag)}*z{x.order}^{j}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|(z)|([-+*/^()]))")


def _tokenize(text: str):
    pos, toks = 0, []
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        num, z, op = mt.groups()
        toks.append(("num", int(num)) if num else ("z", None) if z else ("op", op))
        pos = mt.end()
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind, val=None):
        k, v = self.peek()
        if k != kind or (val is not None and v != val):
            raise ParseError(f"expected {val or kind} in {self.text!r}")
        self.i += 1
        return v

    def parse(self) -> Cyclotomic:
        if not self.toks:
            raise ParseError("empty literal")
        out = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return out

    def expr(self):
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.peek()
            self.i += 1
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.unary()
        while self.peek() == ("op", "*"):
            self.i += 1
            acc = acc * self.unary()
        return acc

    def unary(self):
        if self.peek() == ("op", "-"):
            self.i += 1
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.i += 1
            return self.unary()
        return self.atom()

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.i += 1
            if self.peek() == ("op", "/"):
                self.i += 1
                den = self.take("num")
                if den == 0:
                    raise ParseError("zero denominator")
                return Cyclotomic.rational(Fraction(val, den))
            return Cyclotomic.rational(val)
        if kind == "z":
            self.i += 1
            m = self.take("num")
            j = 1
            if self.peek() == ("op", "^"):
                self.i += 1
                neg = False
                if self.peek() == ("op", "-"):
                    self.i += 1
                    neg = True
                j = self.take("num")
                j = -j if neg else j
            if m < 1:
                raise ParseError("root order must be positive")
            return root_of_unity(m, j)
        if (kind, val) == ("op", "("):
            self.i += 1
            out = self.expr()
            self.take("op", ")")
            return out
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_literal(text: str) -> Cyclotomic:
    """Parse ``1/2 + 3*z4^1``-style literals."""
    return _Parser(text).parse()
