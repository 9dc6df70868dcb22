import cmath
import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from periodic_dedekind import analytic as an
from periodic_dedekind.analytic import (
    SeriesBudget,
    A_series,
    G_via_fourier,
    dirichlet_L,
    eisenstein_G_direct,
    gamma_fn,
    hurwitz_zeta,
    loop_I_quadrature,
    loop_I_residue,
    periodic_L,
)
from periodic_dedekind.bernoulli import bernoulli_poly, periodic_P
from periodic_dedekind.errors import AccuracyError, DomainError, PoleError
from periodic_dedekind.exact import embed, root_of_unity
from periodic_dedekind.sequences import (
    PeriodicSequence,
    character,
    dirichlet_characters,
    gauss_sequence,
    make_sequence,
)

mpmath.mp.dps = 30
F = Fraction
CHI4 = character(4, 1)


def mpc(z):
    return complex(z)


class TestHurwitz:
    def test_examples(self):
        assert abs(hurwitz_zeta(0, F(1, 4)) - 0.25) < 1e-14
        assert abs(hurwitz_zeta(2, 1) - math.pi**2 / 6) < 1e-11
        assert abs(hurwitz_zeta(-1, 1) + 1 / 12) < 1e-12

    def test_pole(self):
        with pytest.raises(PoleError):
            hurwitz_zeta(1, F(1, 2))

    @pytest.mark.parametrize("s", [2.5, 3 + 2j, 0.5 + 10j, -0.3, -2.5 + 1j, 0.7 - 3j, -6, -3 + 0.5j, 12 + 1j])
    @pytest.mark.parametrize("theta", [F(1, 7), F(1, 2), F(5, 6), F(1), F(2, 3)])
    def test_against_mpmath(self, s, theta):
        ref = mpc(mpmath.zeta(s, mpmath.mpf(theta.numerator) / theta.denominator))
        assert abs(hurwitz_zeta(s, theta) - ref) <= 1e-12 * max(1.0, abs(ref))

    @given(st.integers(0, 12), st.fractions(min_value=F(1, 50), max_value=1, max_denominator=50))
    def test_negative_integers_are_bernoulli(self, n, theta):
        ref = -float(bernoulli_poly(n + 1, theta)) / (n + 1)
        assert abs(hurwitz_zeta(-n, theta) - ref) <= 1e-11 * max(1.0, abs(ref))

    def test_reduction_outside_unit_interval(self):
        # zeta(s, theta + 1) = zeta(s, theta) - theta^(-s)
        s = 2.5 + 0.5j
        th = F(1, 3)
        lhs = hurwitz_zeta(s, th + 2)
        rhs = hurwitz_zeta(s, th) - an.cpow(float(th), -s) - an.cpow(float(th + 1), -s)
        assert abs(lhs - rhs) < 1e-12


class TestGamma:
    def test_examples(self):
        assert abs(gamma_fn(0.5) - math.sqrt(math.pi)) < 1e-12
        assert abs(gamma_fn(5) - 24) < 1e-12
        s = 0.3 + 0.2j
        assert abs(gamma_fn(s) * gamma_fn(1 - s) - math.pi / cmath.sin(math.pi * s)) < 1e-10

    @pytest.mark.parametrize("n", [0, -1, -7])
    def test_poles(self, n):
        with pytest.raises(PoleError):
            gamma_fn(n)
        assert an.rgamma(n) == 0

    @given(st.floats(-6, 8), st.floats(-6, 6))
    def test_relative_error_on_strip(self, re, im):
        s = complex(re, im)
        if abs(s - round(re)) < 1e-3 and round(re) <= 0:
            return
        ref = mpc(mpmath.gamma(s))
        assert abs(gamma_fn(s) - ref) <= 1e-12 * abs(ref) + 1e-300


class TestBranch:
    def test_arg_convention(self):
        assert an.arg(-1) == -math.pi
        assert an.arg(-1 - 0j) == -math.pi
        assert an.arg(1j) == math.pi / 2

    @given(st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3, allow_nan=False, allow_infinity=False),
           st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False))
    def test_powers_invert(self, w, s):
        assert abs(an.cpow(w, -s) * an.cpow(w, s) - 1) < 1e-12 * max(1.0, abs(an.cpow(w, -s)) * abs(an.cpow(w, s)))

    def test_negative_real_base(self):
        # (-2)^(1/2) with arg = -pi
        assert abs(an.cpow(-2.0, 0.5) + 1j * math.sqrt(2)) < 1e-14


class TestPeriodicL:
    def test_zeta_reduction(self):
        assert abs(periodic_L(2, make_sequence("const:k=1"), 1, 0) - math.pi**2 / 6) < 1e-11

    def test_leibniz(self):
        assert abs(periodic_L(1, CHI4.seq, 1, 0) - math.pi / 4) < 1e-10

    def test_pole(self):
        with pytest.raises(PoleError):
            periodic_L(1, make_sequence("const:k=3"), 1, 0)

    def test_value_at_zero(self):
        rng = random.Random(1)
        specs = ["char:k=5,i=1", "gauss:k=4,i=1", "exp:k=6", "ramanujan:k=4", "list:k=3;vals=1,z4^1,-2/3"]
        for _ in range(50):
            A = make_sequence(rng.choice(specs))
            beta = rng.choice([1, -1, 3])
            theta = F(rng.randint(-9, 9), rng.choice([1, 1, 2, 3, 5]))
            assert abs(periodic_L(0, A, beta, theta) - embed(periodic_P(1, -theta, A, beta))) < 1e-10

    @pytest.mark.parametrize("beta", [1, -1, 2])
    @pytest.mark.parametrize("theta", [F(0), F(1, 3), F(-5, 2), F(3)])
    def test_direct_sum(self, beta, theta):
        A = make_sequence("char:k=5,i=1")
        s = 4 + 1j
        direct = sum(embed(A(beta * n)) * (n + float(theta)) ** (-s) for n in range(math.floor(-theta) + 1, 4000))
        assert abs(periodic_L(s, A, beta, theta) - direct) < 1e-10


class TestDirichletL:
    def test_examples(self):
        L1 = dirichlet_L(1, CHI4)
        assert abs(L1 - math.pi / 4) < 1e-10
        G = gauss_sequence(CHI4)
        assert periodic_P(1, 0, G) == root_of_unity(4, 1)
        assert abs(-2 * (4 / (2j * math.pi)) * L1 - 1j) < 1e-10

    def test_principal_pole(self):
        with pytest.raises(PoleError):
            dirichlet_L(1, character(5, 0))
        with pytest.raises(DomainError):
            dirichlet_L(0, CHI4)

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_cotangent_form(self, k):
        for chi in dirichlet_characters(k):
            G = gauss_sequence(chi)
            cot = sum(embed(chi(j)) / math.tan(math.pi * j / k) for j in range(1, k))
            rhs = 0.5j * cot - 0.5 * sum(embed(chi(j)) for j in range(1, k))
            assert abs(embed(periodic_P(1, 0, G)) - rhs) < 1e-10

    @pytest.mark.parametrize("k", [3, 4, 5, 7, 8])
    def test_against_mpmath(self, k):
        for chi in dirichlet_characters(k):
            for r in (1, 2, 3):
                if r == 1 and chi.is_principal:
                    continue
                ref = mpc(mpmath.dirichlet(r, [embed(chi(n)) for n in range(k)]))
                assert abs(dirichlet_L(r, chi) - ref) < 1e-12


def lipschitz_rhs(s, tau, terms=200):
    return (-2j * math.pi) ** s / math.gamma(s) * sum(m ** (s - 1) * cmath.exp(2j * math.pi * m * tau) for m in range(1, terms))


class TestASeries:
    def test_zero_sequence(self):
        assert A_series(1j, 2, CHI4.seq, make_sequence("list:k=4;vals=0,0,0,0")) == 0

    def test_gauss_quotient_form(self):
        z, N = 1j, 1
        chi1, chi2 = CHI4, CHI4
        G2 = gauss_sequence(chi2)
        lhs = A_series(z, -2 * N, chi1.seq, G2)
        rhs = mpmath.mpc(0)
        for n in range(1, 60):
            Gnz = sum(embed(chi1(v)) * mpmath.exp(2j * mpmath.pi * n * z * v / 4) for v in range(4))
            rhs += embed(G2(n)) * Gnz * mpmath.mpf(n) ** (-2 * N - 1) / (1 - mpmath.exp(2j * mpmath.pi * n * z))
        assert abs(lhs - complex(rhs)) < 1e-10

    def test_budget_doubling(self):
        A, B = make_sequence("char:k=5,i=1"), make_sequence("gauss:k=5,i=2")
        for z in (1j, 0.3 + 0.5j):
            b1 = SeriesBudget(tail_bound_target=1e-13)
            b2 = SeriesBudget(tail_bound_target=1e-16)
            v1 = A_series(z, 1.5 + 1j, A, B, F(1, 3), F(1, 2), budget=b1)
            v2 = A_series(z, 1.5 + 1j, A, B, F(1, 3), F(1, 2), budget=b2)
            assert b1.achieved_tail <= 1e-13 and b2.achieved_tail <= 1e-16
            assert abs(v1 - v2) <= 1e-12

    def test_budget_exhausted(self):
        with pytest.raises(AccuracyError) as info:
            A_series(0.001j, 2, CHI4.seq, CHI4.seq, budget=SeriesBudget(max_terms=5))
        assert info.value.achieved_tail > 0

    def test_lower_half_plane(self):
        with pytest.raises(DomainError):
            A_series(-1j, 2, CHI4.seq, CHI4.seq)

    def test_lipschitz_row(self):
        # sum_n (tau + n)^(-s) = (-2 pi i)^s / Gamma(s) sum_m m^(s-1) e(m tau)
        s, tau = 3, 1j + F(1, 3)
        one = [1.0]
        lhs = an._row_sum(complex(tau), s, one)
        direct = complex(mpmath.nsum(lambda n: (complex(tau) + n) ** (-s), [-mpmath.inf, mpmath.inf]))
        rhs = lipschitz_rhs(s, complex(tau))
        assert abs(lhs - rhs) < 1e-9
        assert abs(direct - rhs) < 1e-9


class TestEisenstein:
    def test_zero(self):
        zero = make_sequence("list:k=4;vals=0,0,0,0")
        assert eisenstein_G_direct(1j, 3, zero, zero) == 0

    def test_direct_vs_fourier(self):
        for s in (3, 2.5 + 0.5j):
            for z in (1j, 0.3 + 0.9j):
                direct = eisenstein_G_direct(z, s, CHI4.seq, CHI4.seq)
                fourier = G_via_fourier(z, s, CHI4.seq, CHI4.seq)
                assert abs(direct - fourier) <= 1e-7

    def test_weight_four_lattice(self):
        one = make_sequence("const:k=1")
        val = eisenstein_G_direct(1j, 4, one, one)
        closed = mpmath.gamma(0.25) ** 8 / (960 * mpmath.pi**2)
        assert abs(val - complex(closed)) < 1e-12
        # independent lattice loop, summed over growing squares
        M = 80
        loop = sum((m * 1j + n) ** -4 for m in range(-M, M + 1) for n in range(-M, M + 1) if (m, n) != (0, 0))
        assert abs(val - loop) < 1e-4  # tail of the square truncation

    def test_continuation_consistency(self):
        rng = random.Random(30)
        specs = ["char:k=3,i=1", "char:k=4,i=1", "const:k=1", "gauss:k=5,i=1", "list:k=3;vals=1,-1/2,2"]
        for _ in range(30):
            A = make_sequence(rng.choice(specs))
            B = make_sequence(rng.choice([sp for sp in specs if make_sequence(sp).period == A.period]))
            z = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.6, 1.5))
            s = complex(rng.uniform(2.2, 4), rng.uniform(-1, 1))
            r1 = rng.choice([0, F(1, 2), F(1, 3)])
            r2 = rng.choice([0, F(1, 4)])
            direct = eisenstein_G_direct(z, s, A, B, 1, 1, r1, r2)
            fourier = G_via_fourier(z, s, A, B, 1, 1, r1, r2)
            assert abs(direct - fourier) <= 1e-7

    def test_lambda_indicator(self):
        # r1 = 1/2: no L contribution, the Gamma-weighted value is the pure A part
        A = CHI4.seq
        s = 3.2
        a_part, l_part, _, _ = an._fourier_parts(1j, s, A, A, 1, 1, F(1, 2), 0, None)
        assert l_part == 0
        assert abs(G_via_fourier(1j, s, A, A, 1, 1, F(1, 2), 0) - a_part / gamma_fn(s)) < 1e-14

    def test_errors(self):
        with pytest.raises(DomainError):
            eisenstein_G_direct(1j, 2, CHI4.seq, CHI4.seq)
        with pytest.raises(DomainError):
            G_via_fourier(1j, 3, CHI4.seq, CHI4.seq, 1, 2)
        with pytest.raises(PoleError):
            G_via_fourier(1j, 1, CHI4.seq, CHI4.seq)


class TestLoopIntegral:
    def test_display_at_zero(self):
        k, z = 4, 1j
        for mu in range(k):
            for v in range(k):
                res = loop_I_residue(z, 0, 1, 0, mu, v, 1, 0, 0, k)
                b2v = float(bernoulli_poly(2, F(v, k)))
                b2m = float(bernoulli_poly(2, F(mu + 1, k)))
                b1 = float(bernoulli_poly(1, F(mu + 1, k)) * bernoulli_poly(1, F(v, k)))
                disp = -(math.pi * 1j / z) * b2v - math.pi * 1j * z * b2m + 2j * math.pi * b1
                assert abs(res - disp) < 1e-13

    def test_residue_vs_quadrature(self):
        rng = random.Random(7)
        for _ in range(20):
            k = rng.choice([1, 2, 3, 4])
            c = rng.randint(1, 4)
            d = rng.randint(-3, 6)
            z = complex(rng.uniform(-1, 1), rng.uniform(0.3, 2))
            args = (z, rng.randint(0, 3), c, d, rng.randrange(k), rng.randrange(k), rng.randint(1, c),
                    F(rng.randint(-5, 5), rng.randint(1, 4)), F(rng.randint(-5, 5), rng.randint(1, 4)), k)
            res = loop_I_residue(*args)
            assert abs(res - loop_I_quadrature(*args)) < 1e-8 * max(1.0, abs(res))

    def test_k1_collapse(self):
        z = 0.2 + 1.1j
        val = loop_I_residue(z, 0, 1, 0, 0, 0, 1, 0, 0, 1)
        # B_2(1) = B_2(0) = 1/6 and B_1(1) B_1(0) = -1/4
        ref = -(math.pi * 1j / z) / 6 - math.pi * 1j * z / 6 + 2j * math.pi * (-0.25)
        assert abs(val - ref) < 1e-13

    def test_radius_isolation(self):
        with pytest.raises(DomainError):
            loop_I_quadrature(1j, 0, 1, 0, 0, 0, 1, 0, 0, 4, radius=2.0)
        with pytest.raises(DomainError):
            loop_I_residue(-1j, 0, 1, 0, 0, 0, 1)
