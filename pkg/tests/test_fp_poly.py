import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indexdiv.errors import CapacityError, DomainError
from indexdiv.fp_poly import (
    ExtFieldCtx,
    FpPolynomial,
    count_irreducible,
    enumerate_irreducibles,
    ext_elements,
    factor,
    is_irreducible,
    moebius,
)


def P(p, *coeffs):
    return FpPolynomial(p, coeffs)


def brute_irreducible(f):
    """Irreducible iff no monic polynomial of degree 1..deg/2 divides it."""
    p, d = f.p, f.degree
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            g = FpPolynomial(p, tail + (1,))
            if (f % g).is_zero():
                return False
    return True


def brute_count(p, kappa):
    return sum(
        brute_irreducible(FpPolynomial(p, tail + (1,)))
        for tail in itertools.product(range(p), repeat=kappa)
    )


class TestMoebius:
    @pytest.mark.parametrize("m, expected", [(1, 1), (4, 0), (6, 1), (2, -1), (30, -1), (12, 0)])
    def test_values(self, m, expected):
        assert moebius(m) == expected

    def test_zero_is_domain_error(self):
        with pytest.raises(DomainError):
            moebius(0)


class TestCountIrreducible:
    @pytest.mark.parametrize("p, kappa, expected", [(2, 1, 2), (2, 2, 1), (2, 4, 3), (3, 2, 3), (2, 3, 2)])
    def test_examples(self, p, kappa, expected):
        assert count_irreducible(p, kappa) == expected

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("kappa", [1, 2, 3, 4])
    def test_matches_brute_force_and_enumeration(self, p, kappa):
        n = count_irreducible(p, kappa)
        assert n == brute_count(p, kappa)
        assert n == len(enumerate_irreducibles(p, kappa))
        assert n >= 1

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    @pytest.mark.parametrize("kappa", range(1, 13))
    def test_moebius_sum_is_divisible(self, p, kappa):
        from indexdiv.arith import divisors

        assert sum(moebius(kappa // d) * p**d for d in divisors(kappa)) % kappa == 0


class TestEnumerate:
    def test_examples(self):
        assert [str(f) for f in enumerate_irreducibles(2, 1)] == ["x", "x + 1"]
        assert [str(f) for f in enumerate_irreducibles(2, 2)] == ["x^2 + x + 1"]
        assert [str(f) for f in enumerate_irreducibles(3, 1)] == ["x", "x + 1", "x + 2"]

    def test_guard(self):
        with pytest.raises(CapacityError):
            enumerate_irreducibles(2, 21)

    @pytest.mark.parametrize("p", [2, 3])
    @pytest.mark.parametrize("kappa", [1, 2, 3, 4])
    def test_product_is_frobenius_polynomial(self, p, kappa):
        prod = P(p, 1)
        for d in range(1, kappa + 1):
            if kappa % d == 0:
                for f in enumerate_irreducibles(p, d):
                    prod = prod * f
        x = FpPolynomial.x(p)
        assert prod == x ** (p**kappa) - x


class TestIrreducible:
    def test_examples(self):
        assert is_irreducible(P(2, 1, 1, 1))
        assert not is_irreducible(P(2, 1, 0, 1))
        assert is_irreducible(P(2, 1, 1, 0, 0, 1))

    def test_constant_rejected(self):
        with pytest.raises(DomainError):
            is_irreducible(P(2, 1))
        with pytest.raises(DomainError):
            is_irreducible(P(2))

    @pytest.mark.parametrize("p, deg", [(2, 5), (2, 6), (3, 4), (5, 3)])
    def test_agrees_with_trial_division(self, p, deg):
        for tail in itertools.product(range(p), repeat=deg):
            f = FpPolynomial(p, tail + (1,))
            assert is_irreducible(f) == brute_irreducible(f)


class TestFactor:
    def test_examples(self):
        assert factor(P(2, 12, 2, 6, 1, 1)) == [(P(2, 0, 1), 3), (P(2, 1, 1), 1)]
        assert factor(P(2, 1, 1, 1)) == [(P(2, 1, 1, 1), 1)]
        assert factor(P(3, -8, -2, -1, 1)) == [(P(3, 1, 1, 2, 1), 1)]

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factor(P(3))

    @pytest.mark.parametrize("p", [2, 3])
    def test_recombines(self, p):
        rng = random.Random(p)
        for _ in range(100):
            deg = rng.randint(1, 6)
            coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
            f = FpPolynomial(p, tuple(coeffs))
            prod = P(p, f.lead)
            for g, e in factor(f):
                assert g.is_monic() and is_irreducible(g)
                prod = prod * g**e
            assert prod == f

    @settings(max_examples=50, deadline=None)
    @given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=2, max_size=12))
    def test_recombines_hypothesis(self, p, coeffs):
        f = FpPolynomial(p, tuple(coeffs))
        if f.degree < 1:
            return
        prod = P(p, f.lead)
        for g, e in factor(f):
            prod = prod * g**e
        assert prod == f


class TestArithmetic:
    @settings(max_examples=100, deadline=None)
    @given(
        st.sampled_from([2, 3, 5]),
        st.lists(st.integers(0, 4), max_size=8),
        st.lists(st.integers(0, 4), min_size=1, max_size=6),
    )
    def test_division_identity(self, p, a, b):
        a, b = FpPolynomial(p, tuple(a)), FpPolynomial(p, tuple(b))
        if b.is_zero():
            return
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_invariants(self):
        f = FpPolynomial(3, (4, 5, 3, 0))
        assert f.coeffs == (1, 2)
        assert FpPolynomial(2, (0, 0)).coeffs == ()


class TestExtField:
    @pytest.mark.parametrize("p, k", [(2, 1), (2, 2), (3, 1), (2, 4), (3, 2), (5, 2)])
    def test_element_count(self, p, k):
        ctx = ExtFieldCtx(p, k)
        els = list(ext_elements(ctx))
        assert len(els) == p**k
        assert len(set(els)) == p**k

    def test_f4(self):
        ctx = ExtFieldCtx(2, 2)
        assert str(ctx.modulus) == "x^2 + x + 1"
        assert {str(e) for e in ctx.elements()} == {"0", "1", "x", "x + 1"}

    def test_default_modulus_is_first_irreducible(self):
        for p, k in [(2, 3), (3, 2), (5, 2)]:
            assert ExtFieldCtx(p, k).modulus == enumerate_irreducibles(p, k)[0]

    def test_reducible_modulus_rejected(self):
        with pytest.raises(DomainError):
            ExtFieldCtx(2, 2, P(2, 1, 0, 1))

    def test_guard(self):
        with pytest.raises(CapacityError):
            next(ext_elements(ExtFieldCtx(2, 21)))

    @pytest.mark.parametrize("p, k", [(2, 3), (3, 2), (2, 4)])
    def test_log_tables(self, p, k):
        ctx = ExtFieldCtx(p, k)
        log, exp = ctx.log_tables()
        assert sorted(exp) == list(range(1, p**k))
        for a in range(1, p**k):
            for b in range(1, p**k):
                direct = ctx.encode(ctx.mul(ctx.decode(a), ctx.decode(b)))
                assert exp[(log[a] + log[b]) % (p**k - 1)] == direct

    def test_frobenius_fixes_everything(self):
        ctx = ExtFieldCtx(3, 2)
        for z in ctx.elements():
            assert ctx.pow(z, 9) == z
