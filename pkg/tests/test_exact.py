import cmath
import math
import pickle
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import cyclotomics
from periodic_dedekind.errors import CapacityError, DomainError, ParseError
from periodic_dedekind.exact import (
    ONE,
    ZERO,
    Cyclotomic,
    cyclotomic_polynomial,
    divisors,
    embed,
    format_literal,
    max_order,
    mobius,
    order_cap,
    parse_literal,
    root_of_unity,
    totient,
)


def poly_eval(coeffs, x):
    # coefficients lowest degree first
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def naive_phi(n):
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1)


class TestCyclotomicPolynomial:
    def test_small_cases(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)

    def test_divisor_product_is_xm_minus_one(self):
        for m in (1, 6, 12, 15, 30):
            prod = [1]
            for d in divisors(m):
                p = cyclotomic_polynomial(d)
                out = [0] * (len(prod) + len(p) - 1)
                for i, a in enumerate(prod):
                    for j, b in enumerate(p):
                        out[i + j] += a * b
                prod = out
            assert prod == [-1] + [0] * (m - 1) + [1]

    def test_degree_is_totient_up_to_cap(self):
        for m in range(1, 361):
            assert len(cyclotomic_polynomial(m)) - 1 == totient(m) == naive_phi(m)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            cyclotomic_polynomial(361)
        with order_cap(400):
            assert max_order() == 400
            assert len(cyclotomic_polynomial(361)) - 1 == totient(361)
        assert max_order() == 360

    def test_mobius(self):
        assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


class TestRootsOfUnity:
    def test_examples(self):
        assert root_of_unity(4, 2) == -1
        total = ZERO
        for j in range(5):
            total = total + root_of_unity(5, j)
        assert total == 0
        assert abs(embed(root_of_unity(8, 1)) - complex(0.7071067811865476, 0.7071067811865476)) < 1e-12

    @pytest.mark.parametrize("m", range(1, 61))
    def test_order_and_minimal_polynomial(self, m):
        z = root_of_unity(m, 1)
        assert z**m == ONE
        for j in (2, m - 1, 7 * m + 3):
            assert root_of_unity(m, j) ** m == ONE
        assert poly_eval(cyclotomic_polynomial(m), z) == 0

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            root_of_unity(720, 1)

    def test_zero_order_rejected(self):
        with pytest.raises(DomainError):
            root_of_unity(0, 1)


class TestFieldOps:
    def test_examples(self):
        z4 = root_of_unity(4, 1)
        assert (1 + z4) * (1 - z4) == 2
        z3 = root_of_unity(3, 1)
        assert z3.inverse() == root_of_unity(3, 2)
        assert z3.promote(12) == root_of_unity(12, 4)
        assert abs(embed(z3.promote(12)) - embed(root_of_unity(12, 4))) < 1e-12

    def test_inverse_of_zero(self):
        with pytest.raises(DomainError):
            ZERO.inverse()
        with pytest.raises(DomainError):
            ONE / ZERO

    def test_mixed_order_lcm_over_cap(self):
        with order_cap(20):
            with pytest.raises(CapacityError):
                root_of_unity(4, 1) + root_of_unity(7, 1)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            ONE.order = 3

    def test_pickle_round_trip(self):
        x = Fraction(1, 3) + 2 * root_of_unity(12, 5)
        assert pickle.loads(pickle.dumps(x)) == x

    @given(cyclotomics(), cyclotomics(), cyclotomics())
    def test_ring_axioms(self, x, y, w):
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + w == x + (y + w)
        assert (x * y) * w == x * (y * w)
        assert x * (y + w) == x * y + x * w
        assert x - x == 0

    @given(cyclotomics())
    def test_inverse(self, x):
        assume(not x.is_zero())
        assert x * x.inverse() == 1

    @given(cyclotomics(), cyclotomics())
    def test_embed_is_homomorphism(self, x, y):
        scale = 1 + abs(embed(x)) * abs(embed(y))
        assert abs(embed(x * y) - embed(x) * embed(y)) <= 1e-10 * scale
        assert abs(embed(x + y) - (embed(x) + embed(y))) <= 1e-10 * (1 + abs(embed(x)) + abs(embed(y)))

    @given(cyclotomics(order=6), cyclotomics(order=4))
    def test_promotion_commutes_with_arithmetic(self, x, y):
        assert (x * y).promote(12) == x.promote(12) * y.promote(12)
        assert (x + y).promote(24) == x.promote(24) + y.promote(24)

    @given(cyclotomics())
    def test_conjugate_embeds_to_complex_conjugate(self, x):
        assert abs(embed(x.conjugate()) - embed(x).conjugate()) < 1e-10 * (1 + abs(embed(x)))

    @given(st.integers(1, 40), st.integers(-100, 100), st.integers(-100, 100))
    def test_root_products(self, m, i, j):
        assert root_of_unity(m, i) * root_of_unity(m, j) == root_of_unity(m, i + j)

    def test_embedding_samples_per_order(self):
        import random

        rng = random.Random(3)
        for m in (5, 8, 9, 12):
            for _ in range(200):
                x = Cyclotomic(m, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(totient(m))])
                y = Cyclotomic(m, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(totient(m))])
                assert abs(embed(x * y) - embed(x) * embed(y)) <= 1e-10 * (1 + abs(embed(x) * embed(y)))


class TestEmbed:
    def test_examples(self):
        assert embed(Fraction(5, 3)) == complex(1.6666666666666667, 0)
        assert abs(embed(root_of_unity(4, 1)) - 1j) < 1e-15
        assert abs(embed(1 + root_of_unity(6, 1) + root_of_unity(6, 5)) - 2.0) < 1e-12

    @pytest.mark.parametrize("m", [3, 7, 10, 16])
    def test_matches_exponential(self, m):
        for j in range(m):
            assert abs(embed(root_of_unity(m, j)) - cmath.exp(2j * math.pi * j / m)) < 1e-12


class TestLiterals:
    def test_parse_examples(self):
        assert parse_literal("1/2 + 3*z4^1") == Fraction(1, 2) + 3 * root_of_unity(4, 1)
        assert parse_literal("-z3^2") == -root_of_unity(3, 2)
        assert parse_literal("(1 + z4^1)*(1 - z4^1)") == 2
        assert parse_literal("0") == 0

    def test_format_examples(self):
        assert format_literal(Fraction(1, 18)) == "1/18"
        assert format_literal(2 * root_of_unity(4, 1)) == "2*z4^1"
        assert format_literal(ZERO) == "0"

    @pytest.mark.parametrize("bad", ["", "1/", "z", "z4^", "1 +", "(1", "1/0", "abc", "z0^1"])
    def test_parse_errors(self, bad):
        with pytest.raises((ParseError, DomainError)):
            parse_literal(bad)

    @given(cyclotomics())
    def test_round_trip(self, x):
        assert parse_literal(format_literal(x)) == x
