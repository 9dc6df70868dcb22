"""Double-precision analytic layer.

Hurwitz zeta, Gamma, the periodic L-function, the A-series, the Eisenstein
series G(z, s; A_alpha, B_beta; r1, r2) in two independent forms (row sums
over the lattice and the Fourier expansion), and the loop integral I at
s = -N by residues and by quadrature.

Powers use the principal branch with -pi <= arg < pi throughout, so a
negative real base has argument -pi.

Series evaluators take an optional ``SeriesBudget``.  Its ``achieved_tail``
is filled in with a rigorous upper bound for the discarded part; when the
target cannot be met within ``max_terms`` an ``AccuracyError`` is raised.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .bernoulli import bernoulli_number, bernoulli_poly
from .errors import AccuracyError, DomainError, PoleError
from .exact import embed
from .sequences import DirichletCharacter, PeriodicSequence

TWO_PI = 2.0 * math.pi

SeqLike = Union[PeriodicSequence, Sequence[complex]]


@dataclass
class SeriesBudget:
    max_terms: int = 2_000_000
    tail_bound_target: float = 1e-13
    achieved_tail: float = math.inf

    def __post_init__(self):
        if self.max_terms <= 0:
            raise DomainError("max_terms must be positive")
        if not self.tail_bound_target > 0:
            raise DomainError("tail_bound_target must be positive")


# ---------------------------------------------------------------------------
# elementary pieces


def arg(w: complex) -> float:
    """Argument in [-pi, pi)."""
    a = cmath.phase(w)
    return -math.pi if a >= math.pi else a


def log(w: complex) -> complex:
    if w == 0:
        raise PoleError("log(0)")
    return complex(math.log(abs(w)), arg(w))


def cpow(w: complex, s: complex) -> complex:
    """w^s = exp(s Log w) on the principal branch."""
    w = complex(w)
    if w == 0:
        if complex(s).real > 0:
            return 0j
        raise PoleError("0 raised to a power with Re s <= 0")
    return cmath.exp(complex(s) * log(w))


def e_half(s: complex) -> complex:
    """e(s/2) = exp(pi i s)."""
    return cmath.exp(1j * math.pi * complex(s))


def _nonpositive_integer(s: complex) -> bool:
    s = complex(s)
    return s.imag == 0 and s.real <= 0 and s.real == math.floor(s.real)


_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_fn(s: complex) -> complex:
    """Gamma(s) by the Lanczos approximation (g = 7, 9 terms), with reflection."""
    s = complex(s)
    if _nonpositive_integer(s):
        raise PoleError(f"Gamma has a pole at s = {s.real:g}")
    if s.real < 0.5:
        return math.pi / (cmath.sin(math.pi * s) * gamma_fn(1 - s))
    s -= 1
    x = _LANCZOS[0]
    for i in range(1, _LANCZOS_G + 2):
        x += _LANCZOS[i] / (s + i)
    t = s + _LANCZOS_G + 0.5
    return math.sqrt(TWO_PI) * cmath.exp((s + 0.5) * cmath.log(t) - t) * x


def rgamma(s: complex) -> complex:
    """1/Gamma(s), entire; zero at the nonpositive integers."""
    if _nonpositive_integer(s):
        return 0j
    return 1 / gamma_fn(s)


def digamma(a: complex) -> complex:
    """psi(a) for Re a > 0 by upward recurrence and the asymptotic series."""
    a = complex(a)
    acc = 0j
    while abs(a) < 12:
        acc -= 1 / a
        a += 1
    inv2 = 1 / (a * a)
    series = 0j
    p = inv2
    for j in range(1, 8):
        series += float(bernoulli_number(2 * j)) / (2 * j) * p
        p *= inv2
    return acc + cmath.log(a) - 0.5 / a - series


# ---------------------------------------------------------------------------
# Hurwitz zeta

_EM_MAX = 30  # Bernoulli corrections up to B_60


def _poch(s: complex, n: int) -> complex:
    out = 1 + 0j
    for i in range(n):
        out *= s + i
    return out


def _hurwitz_em(s: complex, a: complex, tol: float) -> complex:
    """Euler-Maclaurin for sum_{n>=0} (n+a)^(-s); a off the closed negative axis.

    The direct part stops at M ~ |s| + 12 (keeps cancellation small when
    Re s < 0); Bernoulli corrections B_2, B_4, ... are added until the next
    one drops below tol, always at least through B_8.
    """
    M = int(abs(s)) + 12
    acc = 0j
    for n in range(M):
        acc += cpow(n + a, -s)
    w = M + a
    ws = cpow(w, -s)
    acc += w * ws / (s - 1) + 0.5 * ws
    winv2 = 1 / (w * w)
    p = ws / w  # w^(-s-1)
    poch = s  # (s)_{2j-1}
    for j in range(1, _EM_MAX + 1):
        term = float(bernoulli_number(2 * j)) / math.factorial(2 * j) * poch * p
        acc += term
        if j >= 4 and abs(term) <= tol * max(1.0, abs(acc)):
            return acc
        p *= winv2
        poch *= (s + 2 * j - 1) * (s + 2 * j)
    raise AccuracyError("Hurwitz zeta: Euler-Maclaurin corrections did not settle", achieved_tail=abs(term))


def hurwitz_zeta(s: complex, theta, *, tol: float = 1e-13) -> complex:
    """zeta(s, theta) = sum_{n>=0} (n + theta)^(-s), continued to s != 1.

    Real theta outside (0, 1] is moved into range by the shift identity
    zeta(s, theta) = zeta(s, theta + 1) + theta^(-s).  Complex theta with
    nonzero imaginary part is summed directly on the principal branch.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if isinstance(theta, complex) and theta.imag != 0:
        return _hurwitz_em(s, theta, tol)
    th = Fraction(theta) if not isinstance(theta, float) else theta
    if th <= 0 and th == math.floor(th):
        raise PoleError(f"zeta(s, {theta}) has a singular term (n + theta = 0)")
    if s.real < -0.5 and isinstance(th, Fraction) and th.denominator <= 1000:
        return _hurwitz_reflected(s, th, tol)
    extra = 0j
    while th <= 0:
        extra += cpow(float(th), -s)
        th += 1
    while th > 1:
        th -= 1
        extra -= cpow(float(th), -s)
    return extra + _hurwitz_em(s, complex(float(th)), tol)


def _hurwitz_reflected(s: complex, a: Fraction, tol: float) -> complex:
    """Hurwitz's formula for Re s < 0 and rational a = p/q in (0, 1] after shifting.

    zeta(s, a) = 2 Gamma(1-s) (2 pi q)^(s-1) sum_{r=1}^{q} sin(pi s/2 + 2 pi r a) zeta(1-s, r/q),
    which avoids the cancellation of direct summation for large |Re s|.
    """
    extra = 0j
    while a <= 0:
        extra += cpow(float(a), -s)
        a += 1
    while a > 1:
        a -= 1
        extra -= cpow(float(a), -s)
    q = a.denominator
    t = 1 - s
    acc = 0j
    for r in range(1, q + 1):
        acc += cmath.sin(math.pi * s / 2 + TWO_PI * r * float(a)) * _hurwitz_em(t, complex(r / q), tol)
    return extra + 2 * gamma_fn(t) * cpow(TWO_PI * q, -t) * acc


# ---------------------------------------------------------------------------
# sequences as complex vectors


def values(seq: SeqLike, alpha: int = 1) -> list[complex]:
    """[f(alpha j) for j in 0..k-1] as complex numbers."""
    if isinstance(seq, PeriodicSequence):
        k = seq.period
        return [embed(seq(alpha * j)) for j in range(k)]
    vals = [complex(v) for v in seq]
    k = len(vals)
    return [vals[(alpha * j) % k] for j in range(k)]


def hat_values(vals: Sequence[complex]) -> list[complex]:
    """f^(n) = (1/k) sum_j f(j) e(-nj/k)."""
    k = len(vals)
    return [
        sum(vals[j] * cmath.exp(-2j * math.pi * n * j / k) for j in range(k)) / k for n in range(k)
    ]


def _rescale(vals: Sequence[complex], gamma: int) -> list[complex]:
    k = len(vals)
    return [vals[(gamma * j) % k] for j in range(k)]


def _inverse_mod(beta: int, k: int) -> int:
    if k == 1:
        return 1
    if math.gcd(beta, k) != 1:
        raise DomainError(f"beta = {beta} must be invertible mod k = {k} for the Fourier expansion")
    return pow(beta, -1, k)


# ---------------------------------------------------------------------------
# periodic L-function


def _lam(theta) -> int:
    return 1 if Fraction(theta).denominator == 1 else 0


def periodic_L(s: complex, A: SeqLike, beta: int = 1, theta=0) -> complex:
    """L(s; A_beta; theta) = sum_{n > -theta} f(beta n) (n + theta)^(-s).

    Decomposed as k^(-s) sum_{j=0}^{k-1} f(beta(j - [theta] + lambda))
    zeta(s, (j + {theta} + lambda)/k), lambda = 1 for integral theta, so every
    Hurwitz parameter lies in (0, 1].  At s = 1 the value is finite only when
    A has mean zero, and is then taken from the digamma expansion.
    """
    s = complex(s)
    f = values(A)
    k = len(f)
    theta = Fraction(theta)
    fl = math.floor(theta)
    fr = theta - fl
    lam = _lam(theta)
    coeffs = [f[(beta * (j - fl + lam)) % k] for j in range(k)]
    params = [(j + fr + lam) / k for j in range(k)]
    if s == 1:
        if abs(sum(coeffs)) > 1e-12 * max(1.0, sum(abs(c) for c in coeffs)):
            raise PoleError("L(s; A; theta) has a pole at s = 1 unless A has mean zero")
        return -sum(c * digamma(float(p)) for c, p in zip(coeffs, params) if c) / k
    ks = cpow(k, -s)
    return ks * sum(c * hurwitz_zeta(s, p) for c, p in zip(coeffs, params) if c)


def dirichlet_L(r: int, chi: DirichletCharacter) -> complex:
    """L(r, chi) for r >= 1; r = 1 needs a non-principal character."""
    if r < 1:
        raise DomainError(f"r must be a positive integer, got {r}")
    if r == 1 and chi.is_principal:
        raise PoleError("L(s, chi_0) has a pole at s = 1")
    return periodic_L(r, chi.seq, 1, 0)


# ---------------------------------------------------------------------------
# tail bounds shared by the A-series and the lattice rows


def _geom_poly_tail(q: float, sigma: float, n0: int) -> float:
    """Upper bound for sum_{n>=n0} n^(sigma-1) q^n, or inf if not yet decreasing."""
    if q <= 0:
        return 0.0
    if q >= 1:
        return math.inf
    e = sigma - 1
    head = math.exp(e * math.log(n0) + n0 * math.log(q))
    ratio = q if e <= 0 else q * (1 + 1 / n0) ** e
    if ratio >= 1:
        return math.inf
    return head / (1 - ratio)


# ---------------------------------------------------------------------------
# the A-series


def A_series(
    z: complex,
    s: complex,
    A: SeqLike,
    B: SeqLike,
    r1=0,
    r2=0,
    *,
    alpha: int = 1,
    beta: int = 1,
    budget: SeriesBudget | None = None,
) -> complex:
    """A(z,s;A_alpha,B_beta;r1,r2) = sum_{m>-r1} f(alpha m) sum_{n>=1} g(beta n) e(n((m+r1)z+r2)/k) n^(s-1)."""
    z, s = complex(z), complex(s)
    if z.imag <= 0:
        raise DomainError("A-series needs Im z > 0")
    budget = budget or SeriesBudget()
    f = values(A, alpha)
    g = values(B, beta)
    k = len(f)
    if len(g) != k:
        raise DomainError("A and B must share a period")
    fmax = max(abs(x) for x in f)
    gmax = max(abs(x) for x in g)
    if fmax == 0 or gmax == 0:
        budget.achieved_tail = 0.0
        return 0j
    r1, r2 = float(r1), float(r2)
    sig = s.real
    # |e(w)^...| and |n^(s-1)| <= n^(sig-1) since n > 0 is real
    decay = TWO_PI * z.imag / k
    Q = math.exp(-decay)
    m = math.floor(-r1) + 1
    target = budget.tail_bound_target
    used = 0
    total = 0j
    inner_tails = 0.0
    level = 0
    while True:
        t = m + r1
        q = math.exp(-decay * t)
        # remaining rows m' >= m: sum_n n^(sig-1) q'^n <= q' S(q), S decreasing in q'
        rest = _geom_poly_tail(q, sig, 1)
        if rest < math.inf:
            outer = fmax * gmax * rest / (1 - Q)
            if outer + inner_tails <= target:
                break
        level += 1
        fm = f[(m) % k]
        if fm:
            E = cmath.exp(2j * math.pi * (t * z + r2) / k)
            row = 0j
            pw = 1 + 0j
            row_target = target / (4 * 2.0**min(level, 60))
            n = 1
            while True:
                pw *= E
                gn = g[n % k]
                if gn:
                    row += gn * pw * cpow(n, s - 1)
                n += 1
                used += 1
                if n > 1 and (n % 8 == 0):
                    tail = gmax * _geom_poly_tail(q, sig, n)
                    if tail <= row_target:
                        inner_tails += abs(fm) * tail
                        break
                if used > budget.max_terms:
                    raise AccuracyError(
                        f"A-series exceeded {budget.max_terms} terms", achieved_tail=math.inf
                    )
            total += fm * row
        m += 1
        if used > budget.max_terms:
            raise AccuracyError(f"A-series exceeded {budget.max_terms} terms", achieved_tail=math.inf)
    budget.achieved_tail = outer + inner_tails
    return total


# ---------------------------------------------------------------------------
# the Eisenstein series, Fourier form


def _fourier_parts(z, s, A, B, alpha, beta, r1, r2, budget):
    """(-2 pi i/k)^s k [A-part] and the lambda-weighted L-part of the expansion."""
    s = complex(s)
    if s == 1:
        raise PoleError("G has a pole at s = 1")
    fA = values(A)
    fB = values(B)
    k = len(fA)
    if len(fB) != k:
        raise DomainError("A and B must share a period")
    binv = _inverse_mod(beta, k)
    bh = hat_values(fB)
    budget = budget or SeriesBudget(tail_bound_target=1e-15)
    b1 = SeriesBudget(budget.max_terms, budget.tail_bound_target / 2)
    b2 = SeriesBudget(budget.max_terms, budget.tail_bound_target / 2)
    r1, r2 = Fraction(r1), Fraction(r2)
    a_plus = A_series(z, s, _rescale(fA, alpha), _rescale(bh, -binv), r1, r2, budget=b1)
    a_minus = A_series(z, s, _rescale(fA, -alpha), _rescale(bh, binv), -r1, -r2, budget=b2)
    pref = cmath.exp(s * complex(math.log(TWO_PI / k), -math.pi / 2)) * k
    a_part = pref * (a_plus + e_half(s) * a_minus)
    tail = abs(pref) * (b1.achieved_tail + abs(e_half(s)) * b2.achieved_tail)
    l_part = 0j
    if r1.denominator == 1:
        w = fA[(-alpha * int(r1)) % k]
        if w:
            l_part = w * (periodic_L(s, fB, beta, r2) + e_half(s) * periodic_L(s, fB, -beta, -r2))
    return a_part, l_part, tail, budget


def G_via_fourier(
    z: complex,
    s: complex,
    A: SeqLike,
    B: SeqLike,
    alpha: int = 1,
    beta: int = 1,
    r1=0,
    r2=0,
    *,
    budget: SeriesBudget | None = None,
) -> complex:
    """G(z,s;A_alpha,B_beta;r1,r2) for every s != 1 from its Fourier expansion.

    Gamma(s) G = (-2 pi i/k)^s k [A(z,s;A_alpha,B^_{-beta'};r1,r2) + e(s/2) A(z,s;A_{-alpha},B^_{beta'};-r1,-r2)]
                 + lambda_{r1} f(-alpha r1) Gamma(s) [L(s;B_beta;r2) + e(s/2) L(s;B_{-beta};-r2)]

    with beta' the inverse of beta mod k.  Division by Gamma uses 1/Gamma,
    so the nonpositive integers need no special casing.
    """
    a_part, l_part, tail, budget = _fourier_parts(z, s, A, B, alpha, beta, r1, r2, budget)
    g = rgamma(s)
    budget.achieved_tail = abs(g) * tail
    return g * a_part + l_part


def gamma_G_via_fourier(
    z: complex,
    s: complex,
    A: SeqLike,
    B: SeqLike,
    alpha: int = 1,
    beta: int = 1,
    r1=0,
    r2=0,
    *,
    budget: SeriesBudget | None = None,
) -> complex:
    """Gamma(s) G(z,s;A_alpha,B_beta;r1,r2); undefined where Gamma has a pole."""
    a_part, l_part, tail, budget = _fourier_parts(z, s, A, B, alpha, beta, r1, r2, budget)
    budget.achieved_tail = tail
    if l_part:
        return a_part + gamma_fn(s) * l_part
    return a_part


# ---------------------------------------------------------------------------
# the Eisenstein series, lattice rows


def _row_sum(w: complex, s: complex, g: Sequence[complex]) -> complex:
    """sum_{n in Z} g(n) (w + n)^(-s) for Im w != 0, via Hurwitz zeta per residue class.

    For n = j - kq (q >= 1) the base is -k(q - a), a = (w + j)/k, whose
    argument differs from that of q - a by +pi when Im w > 0, -pi otherwise.
    """
    k = len(g)
    ks = cpow(k, -s)
    flip = cmath.exp(-1j * math.pi * s) if w.imag > 0 else cmath.exp(1j * math.pi * s)
    acc = 0j
    for j in range(k):
        if not g[j]:
            continue
        a = (w + j) / k
        acc += g[j] * (hurwitz_zeta(s, a) + flip * hurwitz_zeta(s, 1 - a))
    return ks * acc


def eisenstein_G_direct(
    z: complex,
    s: complex,
    A: SeqLike,
    B: SeqLike,
    alpha: int = 1,
    beta: int = 1,
    r1=0,
    r2=0,
    *,
    budget: SeriesBudget | None = None,
) -> complex:
    """sum' f(alpha m) g(beta n) ((m+r1)z + n + r2)^(-s) summed row by row.

    Each row (fixed m) is summed over all n exactly through Hurwitz zeta
    values with complex parameter.  Complete rows decay like
    exp(-2 pi |m + r1| Im z / k), which gives the row cut-off; the bound
    used is the Lipschitz majorant of a complete row.  The real row
    m = -r1 (integral r1) omits the excluded point.
    """
    z, s = complex(z), complex(s)
    if z.imag <= 0:
        raise DomainError("Eisenstein series needs Im z > 0")
    if s.real <= 2:
        raise DomainError("the lattice sum converges absolutely only for Re s > 2")
    budget = budget or SeriesBudget(tail_bound_target=1e-12)
    f = values(A, alpha)
    g = values(B, beta)
    k = len(f)
    if len(g) != k:
        raise DomainError("A and B must share a period")
    fmax = max(abs(x) for x in f)
    gmax = max(abs(x) for x in g)
    if fmax == 0 or gmax == 0:
        budget.achieved_tail = 0.0
        return 0j
    r1f, r2f = Fraction(r1), Fraction(r2)
    sig = s.real
    # |row(w)| <= k (2 pi/k)^sig e^{pi |Im s|/2} |1/Gamma(s)| sum_n |g^| n^(sig-1) e^{-2 pi n |Im w|/k}
    ghat = max(abs(x) for x in hat_values(g))
    lip = k * (TWO_PI / k) ** sig * math.exp(math.pi * abs(s.imag) / 2) * abs(rgamma(s)) * ghat
    decay = TWO_PI * z.imag / k
    Q = math.exp(-decay)
    total = 0j
    if r1f.denominator == 1:
        w0 = f[(-int(r1f)) % k]
        if w0:
            total += w0 * (periodic_L(s, g, 1, r2f) + e_half(s) * periodic_L(s, g, -1, -r2f))
    tails = 0.0
    for direction in (1, -1):
        m = math.floor(-r1f) + 1 if direction == 1 else math.ceil(-r1f) - 1
        rows = 0
        while True:
            t = abs(m + r1f)
            q = math.exp(-decay * float(t))
            rest = _geom_poly_tail(q, sig, 1)
            if rest < math.inf:
                bound = fmax * lip * rest / (1 - Q)
                if bound <= budget.tail_bound_target / 2:
                    tails += bound
                    break
            fm = f[m % k]
            if fm:
                w = float(m + r1f) * z + float(r2f)
                total += fm * _row_sum(w, s, g)
            m += direction
            rows += 1
            if rows > budget.max_terms:
                raise AccuracyError("lattice rows did not converge", achieved_tail=math.inf)
    budget.achieved_tail = tails
    return total


# ---------------------------------------------------------------------------
# the loop integral I(z, -N, c, d, r1, r2)


def _expm1(a: complex) -> complex:
    return 2 * cmath.exp(a / 2) * cmath.sinh(a / 2)


def _loop_points(c: int, d: int, mu: int, v: int, j: int, R1, R2, k: int):
    R1, R2 = Fraction(R1), Fraction(R2)
    fr1 = R1 - math.floor(R1)
    fr2 = R2 - math.floor(R2)
    rho = fr2 * c - fr1 * d
    t = (d * j + rho) / c
    x1 = (c * mu + j - fr1) / (c * k)
    x2 = (v + (t - math.floor(t))) / k
    return x1, x2


def loop_I_residue(
    z: complex, N: int, c: int, d: int, mu: int, v: int, j: int, R1=0, R2=0, k: int = 1
) -> complex:
    """I(z,-N,...) = 2 pi i k^N sum_{m+n=N+2} B_m(x1) B_n(x2) (-(cz+d))^(m-1) / (m! n!),

    x1 = (c mu + j - {R1})/(ck), x2 = (v + {(dj + rho)/c})/k, rho = {R2}c - {R1}d.
    """
    if N < 0:
        raise DomainError("N must be a nonnegative integer")
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("loop integral needs Im z > 0")
    x1, x2 = _loop_points(c, d, mu, v, j, R1, R2, k)
    w = -(c * z + d)
    acc = 0j
    for m in range(N + 3):
        n = N + 2 - m
        coef = bernoulli_poly(m, x1) * bernoulli_poly(n, x2) / (math.factorial(m) * math.factorial(n))
        acc += float(coef) * w ** (m - 1)
    return TWO_PI * 1j * k**N * acc


def loop_I_quadrature(
    z: complex,
    N: int,
    c: int,
    d: int,
    mu: int,
    v: int,
    j: int,
    R1=0,
    R2=0,
    k: int = 1,
    *,
    radius: float | None = None,
    nodes: int = 4096,
) -> complex:
    """Trapezoid rule for the loop integral on the circle |u| = radius.

    At s = -N the integrand u^(-N-1) K(u) is single valued, so the loop
    collapses to a circle around the origin.  The circle must not reach
    the nearest other zeros at |u| = 2 pi/k and 2 pi/(k |cz+d|).
    """
    if N < 0:
        raise DomainError("N must be a nonnegative integer")
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("loop integral needs Im z > 0")
    x1, x2 = _loop_points(c, d, mu, v, j, R1, R2, k)
    x1, x2 = float(x1), float(x2)
    cz = c * z + d
    limit = min(TWO_PI / k, TWO_PI / (k * abs(cz)))
    if radius is None:
        radius = min(1 / (2 * k), 1 / (2 * k * abs(cz)))
    if not 0 < radius < limit:
        raise DomainError(
            f"radius {radius} must lie in (0, {limit:.6g}) so that u = 0 is the only enclosed zero"
        )
    acc = 0j
    for i in range(nodes):
        u = radius * cmath.exp(2j * math.pi * i / nodes)
        a = -k * u * cz
        kern = cmath.exp(x1 * a) / _expm1(a) * cmath.exp(x2 * k * u) / _expm1(k * u)
        acc += u ** (-N) * kern
    return TWO_PI * 1j * acc / nodes
