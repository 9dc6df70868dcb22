"""Classical, Hardy-Berndt, periodic and generalized periodic Dedekind sums.

Every periodic sum is an instance of one shape,

    sum_{n=1}^{ck} x(alpha (n+y)) P_1((n+y)/(ck)) P_1(d(n+y)/c + x0, Y_beta)

with P_1(t, Y_beta) = sum_v y(-beta v) P_1((v+t)/k).  The named families
only differ in which sequence plays which role and in their congruence
side-conditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bernoulli import P_star, bernoulli_function_P, periodic_P, sawtooth
from .errors import DomainError
from .exact import ZERO, Cyclotomic
from .sequences import DirichletCharacter, PeriodicSequence


@dataclass(frozen=True)
class ModularMap:
    """(a, b, c, d) with ad - bc = 1 and c > 0."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"ad - bc must be 1 for {self}")
        if self.c <= 0:
            raise DomainError(f"c must be positive for {self}")

    def ad_zero_mod(self, k: int) -> bool:
        return self.a % k == 0 and self.d % k == 0

    def bc_zero_mod(self, k: int) -> bool:
        return self.b % k == 0 and self.c % k == 0

    def __call__(self, z: complex) -> complex:
        return (self.a * z + self.b) / (self.c * z + self.d)

    @classmethod
    def completing(cls, c: int, d: int, k: int = 1) -> "ModularMap":
        """Some (a, b, c, d) with a = 0 mod k, found from bc = -1 mod dk."""
        b = auto_b(d, c, k)
        a = (1 + b * c) // d if d else 0
        return cls(a, b, c, d)


class Family(Enum):
    BbAc = "BbAc"
    AdBa = "AdBa"


# ---------------------------------------------------------------------------
# classical and Hardy-Berndt sums


def _require_coprime(d: int, c: int) -> None:
    if c <= 0:
        raise DomainError(f"c must be positive, got c={c}")
    if math.gcd(c, d) != 1:
        raise DomainError(f"gcd(c, d) must be 1 for the Dedekind sum s(d, c), got ({d}, {c})")


def classical_s(d: int, c: int, *, require_coprime: bool = True) -> Fraction:
    """s(d, c) = sum_{n mod c} ((n/c)) ((dn/c))."""
    if require_coprime:
        _require_coprime(d, c)
    elif c <= 0:
        raise DomainError("c must be positive")
    return sum(
        (sawtooth(Fraction(n, c)) * sawtooth(Fraction(d * n, c)) for n in range(1, c)),
        Fraction(0),
    )


def hardy_s2(d: int, c: int, *, require_coprime: bool = True) -> Fraction:
    """s_2(d, c) = sum_{n=1}^{c-1} (-1)^n P_1(n/c) P_1(dn/c)."""
    if require_coprime:
        _require_coprime(d, c)
    elif c <= 0:
        raise DomainError("c must be positive")
    P1 = bernoulli_function_P
    return sum(
        ((-1) ** n * P1(1, Fraction(n, c)) * P1(1, Fraction(d * n, c)) for n in range(1, c)),
        Fraction(0),
    )


def hardy_s3(d, c: int, *, require_coprime: bool = True) -> Fraction:
    """s_3(d, c) = sum_{n=1}^{c-1} (-1)^n P_1(dn/c)."""
    if require_coprime:
        _require_coprime(d, c)
    elif c <= 0:
        raise DomainError("c must be positive")
    P1 = bernoulli_function_P
    return sum(((-1) ** n * P1(1, Fraction(d) * n / c) for n in range(1, c)), Fraction(0))


# ---------------------------------------------------------------------------
# the shared kernel


def _p1_table(seq: PeriodicSequence, beta: int):
    k = seq.period
    cache = {}

    def p1(t: Fraction) -> Cyclotomic:
        # P_1(t, Y_beta) has period k in t
        key = t - k * math.floor(t / k)
        val = cache.get(key)
        if val is None:
            val = periodic_P(1, key, seq, beta)
            cache[key] = val
        return val

    return p1


def dedekind_kernel(
    d: int,
    c: int,
    outer: PeriodicSequence,
    alpha: int,
    inner: PeriodicSequence,
    beta: int,
    x=0,
    y=0,
) -> Cyclotomic:
    """sum_{n=1}^{ck} outer(alpha n) P_1((n+y)/ck) P_1(d(n+y)/c + x, inner_beta).

    ``k`` is the common period of the two sequences; no congruence
    conditions are checked here.
    """
    if c <= 0:
        raise DomainError(f"c must be positive, got {c}")
    if outer.period != inner.period:
        raise DomainError(
            f"sequences must share a period, got {outer.period} and {inner.period}"
        )
    k = outer.period
    x, y = Fraction(x), Fraction(y)
    ck = c * k
    p1 = _p1_table(inner, beta)
    acc = ZERO
    for n in range(1, ck + 1):
        w = outer(alpha * n)
        if not w:
            continue
        t = n + y
        left = bernoulli_function_P(1, t / ck)
        if not left:
            continue
        right = p1(Fraction(d) * t / c + x)
        if right:
            acc = acc + w * right * left
    return acc


# ---------------------------------------------------------------------------
# the named families


def auto_b(d: int, c: int, k: int = 1) -> int:
    """Least positive b with bc = -1 (mod |d| k).

    The default k = 1 is the plain side-condition bc = -1 (mod d).  With k
    set, a = (1 + bc)/d is also 0 mod k.
    """
    if d == 0:
        if c != 1:
            raise DomainError("d = 0 forces c = 1")
        return -1
    m = abs(d) * k
    if math.gcd(c, m) != 1:
        raise DomainError(
            f"gcd(c, d) = 1 required to solve bc = -1 (mod {m}), got c={c}, d={d} (periodic Dedekind sum side-condition)"
        )
    if m == 1:
        return 1
    return (-pow(c, -1, m)) % m


def auto_a(d: int, c: int) -> int:
    """Least positive a with ad = 1 (mod c)."""
    if c == 1:
        return 1
    return pow(d, -1, c) % c or c


def _check_bbac(d: int, c: int, b: int, k: int) -> None:
    if c <= 0:
        raise DomainError(f"c > 0 required, got c={c} (periodic Dedekind sum definition)")
    if math.gcd(c, d) != 1:
        raise DomainError(f"gcd(c, d) = 1 required, got c={c}, d={d} (periodic Dedekind sum definition)")
    if d % k:
        raise DomainError(f"d = 0 (mod k) required, got d={d}, k={k} (periodic Dedekind sum s(d,c;B_b,A_c))")
    ok = (b * c == -1) if d == 0 else (b * c + 1) % d == 0
    if not ok:
        raise DomainError(f"bc = -1 (mod d) required, got b={b}, c={c}, d={d} (periodic Dedekind sum s(d,c;B_b,A_c))")


def _check_adba(d: int, c: int, a: int, k: int) -> None:
    if c <= 0:
        raise DomainError(f"c > 0 required, got c={c} (periodic Dedekind sum definition)")
    if math.gcd(c, d) != 1:
        raise DomainError(f"gcd(c, d) = 1 required, got c={c}, d={d} (periodic Dedekind sum definition)")
    if c % k:
        raise DomainError(f"c = 0 (mod k) required, got c={c}, k={k} (periodic Dedekind sum s(d,c;A_d,B_a))")
    if (a * d - 1) % c:
        raise DomainError(f"ad = 1 (mod c) required, got a={a}, d={d}, c={c} (periodic Dedekind sum s(d,c;A_d,B_a))")


def periodic_dedekind(
    d: int,
    c: int,
    A: PeriodicSequence,
    B: PeriodicSequence,
    family: Family | str = Family.BbAc,
    *,
    b: int | None = None,
    a: int | None = None,
) -> Cyclotomic:
    """Periodic Dedekind sums.

    BbAc: s(d,c;B_b,A_c) = sum_{n=1}^{ck} f*(bn) P_1(n/ck) P_1(dn/c, A_c),
          needs d = 0 (mod k) and bc = -1 (mod d).
    AdBa: s(d,c;A_d,B_a) = sum_{n=1}^{ck} f(dn) P_1(n/ck) P_1(dn/c, B_a),
          needs c = 0 (mod k) and ad = 1 (mod c).
    """
    return generalized_dedekind(d, c, A, B, family, b=b, a=a)


def generalized_dedekind(
    d: int,
    c: int,
    A: PeriodicSequence,
    B: PeriodicSequence,
    family: Family | str = Family.BbAc,
    x=0,
    y=0,
    *,
    b: int | None = None,
    a: int | None = None,
) -> Cyclotomic:
    """Shifted sums s(d,c;B_b,A_c;x,y) and s(d,c;A_d,B_a;x,y)."""
    family = Family(family)
    k = A.period
    if B.period != k:
        raise DomainError(f"A and B must share a period, got {A.period} and {B.period}")
    if family is Family.BbAc:
        if b is None:
            b = auto_b(d, c)
        _check_bbac(d, c, b, k)
        return dedekind_kernel(d, c, B, b, A, c, x, y)
    if a is None:
        a = auto_a(d, c)
    _check_adba(d, c, a, k)
    return dedekind_kernel(d, c, A, d, B, a, x, y)


def s_sum(d: int, c: int, outer: PeriodicSequence, alpha: int, inner: PeriodicSequence, beta: int, x=0, y=0) -> Cyclotomic:
    """s(d, c; X_alpha, Y_beta; x, y) read literally, with no side-conditions.

    Used for the swapped and negated arguments that appear in reciprocity
    laws, e.g. s(-c, d; A_c, B_{-b}).
    """
    return dedekind_kernel(d, c, outer, alpha, inner, beta, x, y)


def alternating_char_sum(d: int, c: int, chi2: DirichletCharacter, chi1: DirichletCharacter) -> Cyclotomic:
    """s*(d,c;chi2,chi1) = sum_{n=1}^{ck} (-1)^n chi2(n) P_1(n/ck) P*_1(dn/c, conj chi1)."""
    k = chi1.modulus
    if chi2.modulus != k:
        raise DomainError("characters must share a modulus")
    if k % 2:
        raise DomainError(f"s* needs an even modulus, got k={k}")
    if c <= 0 or math.gcd(c, d) != 1:
        raise DomainError(f"gcd(c, d) = 1 and c > 0 required, got c={c}, d={d}")
    chi1bar = chi1.conj()
    cache = {}
    acc = ZERO
    for n in range(1, c * k + 1):
        w = chi2(n)
        if not w:
            continue
        left = bernoulli_function_P(1, Fraction(n, c * k))
        t = Fraction(d * n, c)
        key = t - k * math.floor(t / k)
        if key not in cache:
            cache[key] = P_star(1, key, chi1bar)
        acc = acc + (w * cache[key] * left if n % 2 == 0 else -(w * cache[key] * left))
    return acc
