import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from periodic_dedekind.errors import DomainError, ParseError
from periodic_dedekind.exact import ONE, ZERO, Cyclotomic, embed, root_of_unity, totient
from periodic_dedekind.sequences import (
    PeriodicSequence,
    alternating_sequence,
    character,
    dirichlet_characters,
    fourier_hat,
    fourier_inverse,
    gauss_sequence,
    gauss_sum,
    make_sequence,
    principal_character,
    ramanujan_sequence,
    ramanujan_sum,
    scale_index,
)

I = root_of_unity(4, 1)


def vals(seq):
    return list(seq.values)


def random_sequence(rng, k):
    pool = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)), root_of_unity(4, rng.randint(0, 3)),
            root_of_unity(k, rng.randint(0, k - 1)) if k > 1 else ONE]
    return PeriodicSequence(k, [rng.choice(pool) * rng.randint(-2, 2) for _ in range(k)])


class TestMakeSequence:
    def test_examples(self):
        assert vals(make_sequence("const:k=3")) == [1, 1, 1]
        assert vals(make_sequence("ramanujan:k=4")) == [2, 0, -2, 0]
        assert vals(make_sequence("char:k=4,i=1")) == [0, 1, 0, -1]

    def test_ramanujan_by_direct_summation(self):
        for k in range(1, 13):
            for n in range(k):
                direct = ZERO
                for v in range(k):
                    if math.gcd(v, k) == 1:
                        direct = direct + root_of_unity(k, n * v)
                assert direct == ramanujan_sum(k, n)

    def test_grammar(self):
        assert vals(make_sequence("list:k=3;vals=1/2,z4^1,-1")) == [Fraction(1, 2), I, -1]
        assert make_sequence("principal:k=6") == principal_character(6).seq
        assert vals(make_sequence("exp:k=4")) == [1, I, -1, -I]
        assert make_sequence("scale:-1:(char:k=4,i=1)") == scale_index(character(4, 1).seq, -1)
        assert make_sequence("dft:(const:k=3)") == fourier_hat(make_sequence("const:k=3"))
        assert vals(make_sequence("altchar:k=3,i=0")) == [0, -1, 1, 0, 1, -1]
        g = make_sequence("gauss_shift:k=4,i=1")
        assert vals(g) == [gauss_sum(n + 2, character(4, 1)) for n in range(4)]

    @pytest.mark.parametrize(
        "spec",
        ["", "const", "const:k=", "const:k=0", "char:k=4", "char:k=4,i=9", "list:k=2;vals=1",
         "dft:(const:k=3", "scale:x:(const:k=2)", "foo:k=3", "const:k=3,i=1"],
    )
    def test_rejects_malformed(self, spec):
        with pytest.raises((ParseError, DomainError)):
            make_sequence(spec)

    def test_gauss_shift_odd_modulus(self):
        with pytest.raises(DomainError):
            make_sequence("gauss_shift:k=3,i=1")


class TestScaleIndex:
    def test_identity_scaling(self):
        s = make_sequence("list:k=3;vals=1,2,3")
        assert scale_index(s, 1) == s

    def test_negation_of_odd_character(self):
        assert vals(scale_index(character(4, 1).seq, -1)) == [0, -1, 0, 1]

    @pytest.mark.parametrize("k", [3, 4, 5, 7, 8, 9, 12])
    def test_characters_are_multiplicative(self, k):
        for chi in dirichlet_characters(k):
            for a in range(1, k):
                if math.gcd(a, k) != 1:
                    continue
                scaled = scale_index(chi.seq, a)
                assert vals(scaled) == [chi(a) * v for v in chi.seq.values]

    def test_non_coprime_is_literal(self):
        s = make_sequence("list:k=4;vals=1,2,3,4")
        assert vals(scale_index(s, 2)) == [1, 3, 1, 3]


class TestFourier:
    def test_examples(self):
        assert vals(fourier_hat(make_sequence("const:k=3"))) == [1, 0, 0]
        assert vals(fourier_hat(character(4, 1).seq)) == [0, -I / 2, 0, I / 2]

    def test_double_hat_reflects(self):
        rng = random.Random(11)
        for _ in range(30):
            k = rng.randint(1, 12)
            s = random_sequence(rng, k)
            hh = fourier_hat(fourier_hat(s))
            # with the 1/k normalisation the reflection carries a factor 1/k
            assert all(hh(n) == s(-n) * Fraction(1, k) for n in range(k))

    def test_inversion_on_random_sequences(self):
        rng = random.Random(5)
        for _ in range(100):
            k = rng.randint(1, 12)
            s = random_sequence(rng, k)
            h = fourier_hat(s)
            assert h.period == k
            assert fourier_inverse(h) == s
            # f(n) = sum_j f^(j) e(nj/k)
            for n in range(k):
                acc = ZERO
                for j in range(k):
                    acc = acc + h(j) * root_of_unity(k, n * j)
                assert acc == s(n)


class TestCharacters:
    def test_counts(self):
        for k in range(1, 25):
            chars = dirichlet_characters(k)
            assert len(chars) == totient(k)
            assert chars[0].is_principal
            assert len(set(chars)) == len(chars)

    def test_named_moduli(self):
        assert [vals(c.seq) for c in dirichlet_characters(4)] == [[0, 1, 0, 1], [0, 1, 0, -1]]
        assert vals(dirichlet_characters(6)[1].seq) == [0, 1, 0, 0, 0, -1]

    def test_mod5_quartic_characters(self):
        # brute force: homomorphisms of the cyclic group generated by 2
        quartic = [c for c in dirichlet_characters(5) if c(2) in (I, -I)]
        assert len(quartic) == 2
        for c in quartic:
            for e in range(4):
                assert c(pow(2, e, 5)) == c(2) ** e

    @pytest.mark.parametrize("k", list(range(1, 25)))
    def test_character_axioms(self, k):
        for chi in dirichlet_characters(k):
            assert chi(1) == 1
            assert chi.parity in (1, -1)
            for m, n in itertools.product(range(k), repeat=2):
                assert chi(m * n) == chi(m) * chi(n)
                if math.gcd(m, k) != 1:
                    assert chi(m) == 0
            for n in range(k):
                assert chi(-1) * chi(n) == chi(-n)

    @pytest.mark.parametrize("k", [3, 4, 5, 7, 8, 12])
    def test_orthogonality(self, k):
        chars = dirichlet_characters(k)
        for a, b in itertools.product(chars, repeat=2):
            acc = ZERO
            for n in range(k):
                acc = acc + a(n) * b.conj()(n)
            assert acc == (totient(k) if a == b else 0)

    def test_primitivity(self):
        assert [c.is_primitive for c in dirichlet_characters(4)] == [False, True]
        assert sum(c.is_primitive for c in dirichlet_characters(8)) == 2
        assert sum(c.is_primitive for c in dirichlet_characters(12)) == 1
        assert all(c.is_primitive for c in dirichlet_characters(7)[1:])


class TestGaussSums:
    def test_examples(self):
        assert gauss_sum(1, character(4, 1)) == 2 * I
        for k in range(1, 13):
            assert gauss_sum(0, principal_character(k)) == totient(k)

    @pytest.mark.parametrize("k", [3, 4, 5, 7])
    def test_primitive_separation(self, k):
        for chi in dirichlet_characters(k):
            if not chi.is_primitive:
                continue
            g1 = gauss_sum(1, chi)
            assert g1 * g1.conjugate() == k
            for n in range(-k, 2 * k):
                assert gauss_sum(n, chi) == chi.conj()(n) * g1

    @pytest.mark.parametrize("k", range(1, 13))
    def test_principal_gives_ramanujan(self, k):
        assert gauss_sequence(principal_character(k)) == ramanujan_sequence(k)

    def test_embed_matches_float_sum(self):
        import cmath

        chi = character(7, 2)
        for n in range(7):
            direct = sum(embed(chi(v)) * cmath.exp(2j * math.pi * n * v / 7) for v in range(7))
            assert abs(embed(gauss_sum(n, chi)) - direct) < 1e-12


class TestAlternating:
    @pytest.mark.parametrize("k", range(1, 13))
    def test_honest_period(self, k):
        for chi in dirichlet_characters(k):
            alt = alternating_sequence(chi)
            assert alt.period == (k if k % 2 == 0 else 2 * k)
            for n in range(-30, 30):
                assert alt(n) == (chi(n) if n % 2 == 0 else -chi(n))


@given(st.integers(1, 12), st.data())
def test_hat_has_period_k_and_inverts(k, data):
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=k, max_size=k))
    s = PeriodicSequence(k, [Fraction(c) for c in coeffs])
    h = fourier_hat(s)
    assert h.period == k
    assert fourier_inverse(h) == s


@given(st.integers(1, 12), st.integers(-50, 50), st.integers(-50, 50))
def test_scale_composes(k, a, b):
    s = PeriodicSequence(k, [root_of_unity(k, j * j) for j in range(k)])
    assert scale_index(scale_index(s, a), b) == scale_index(s, a * b)
