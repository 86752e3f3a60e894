import itertools
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BUNDLED, SMALL_PRIMES, bundled_order, count_homomorphisms
from indexdiv.arith import divisors
from indexdiv.criteria import factor_shape, shape_matches_profile, witness_search
from indexdiv.errors import RankDeficient, ShapeError
from indexdiv.fp_poly import ExtFieldCtx
from indexdiv.hnf_ideals import (
    HnfLattice,
    frobenius_ideal,
    hnf,
    hnf_gcd_check,
    ideal_from_elements,
    lambda_kappa,
    lambda_profile,
    ramification_probe,
    xgcd,
)
from indexdiv.number_field import Order


def ext_homomorphisms(O, p, k):
    """Unital ring maps O -> F_{p^k}, by exhaustive search over images of xi_2..xi_n.

    Every prime of residue degree d dividing k contributes d such maps, so the
    count equals sum over d | k of d * lambda_d.
    """
    ctx = ExtFieldCtx(p, k)
    q = ctx.order
    els = [ctx.decode(i) for i in range(q)]
    add = [[ctx.encode(ctx.add(a, b)) for b in els] for a in els]
    mul = [[ctx.encode(ctx.mul(a, b)) for b in els] for a in els]
    ints = [ctx.encode(ctx.element(c % p)) for c in range(p)]

    def lin(vec, x):
        acc = 0
        for c, xi in zip(vec, x):
            acc = add[acc][mul[ints[c % p]][xi]]
        return acc

    n, T = O.n, O.table
    one = ctx.encode(ctx.one)
    count = 0
    for tail in itertools.product(range(q), repeat=n - 1):
        x = (one,) + tail
        if all(mul[x[i]][x[j]] == lin(T[i][j], x) for i in range(1, n) for j in range(i, n)):
            count += 1
    return count


def hnf_oracle(rows):
    M = sympy.Matrix(rows)
    from sympy.matrices.normalforms import hermite_normal_form

    # sympy works with column-style HNF; transpose to get the row lattice
    H = hermite_normal_form(M.T).T
    return H


class TestHnf:
    def test_xgcd(self):
        for a, b in [(12, 18), (-12, 18), (0, 5), (7, 0), (-3, -9)]:
            g, x, y = xgcd(a, b)
            assert g == abs(sympy.gcd(a, b)) and a * x + b * y == g

    def test_examples(self):
        assert hnf([[2, 0], [0, 2], [1, 1]]) == [(1, 1), (0, 2)]
        assert hnf([[6, 4], [0, 2]]) == [(6, 0), (0, 2)]
        assert hnf([[3, 1], [0, 5]], modulus=15) == [(3, 1), (0, 5)]

    def test_rank_deficient(self):
        with pytest.raises(RankDeficient):
            hnf([[1, 2], [2, 4]])
        with pytest.raises(ShapeError):
            hnf([[1, 2], [1]])

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 10**6), st.integers(2, 4))
    def test_lattice_invariants(self, seed, n):
        rng = random.Random(seed)
        rows = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n + rng.randint(0, 3))]
        if sympy.Matrix(rows).rank() < n:
            return
        H = hnf(rows)
        # same lattice: the determinant equals the gcd of maximal minors
        minors = [
            abs(sympy.Matrix([rows[i] for i in idx]).det()) for idx in itertools.combinations(range(len(rows)), n)
        ]
        det = 1
        for i in range(n):
            det *= H[i][i]
        assert det == sympy.gcd(minors)
        # every generator lies in the lattice and H is the canonical form
        L = sympy.Matrix(H)
        for r in rows:
            sol = sympy.Matrix([r]) * L.inv()
            assert all(x.is_integer for x in sol)
        assert hnf(list(H)[::-1]) == H

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6))
    def test_modular_agrees(self, seed):
        rng = random.Random(seed)
        n = 3
        N = rng.choice([4, 12, 27, 30])
        rows = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(4)]
        rows += [[N * int(i == j) for j in range(n)] for i in range(n)]
        assert hnf(rows, modulus=N) == hnf(rows)

    def test_lattice_validation(self, golden):
        with pytest.raises(ShapeError):
            HnfLattice(golden, ((2, 3), (0, 2)))
        with pytest.raises(ShapeError):
            HnfLattice(golden, ((2, 0), (1, 2)))
        with pytest.raises(RankDeficient):
            HnfLattice(golden, ((0, 0), (0, 2)))


class TestIdeals:
    def test_principal_norm(self, dedekind):
        for a in ([2, 0, 0], [0, 1, 0], [1, 1, 0], [3, -1, 2]):
            el = dedekind.element(a)
            I = ideal_from_elements(dedekind, [el])
            from indexdiv.number_field import mult_matrix
            from indexdiv.linalg import int_det

            assert I.norm == abs(int_det(mult_matrix(el)))
            assert I.is_ideal()
            assert el in I

    def test_gcd_check(self, dedekind):
        I = ideal_from_elements(dedekind, [dedekind.element([2, 0, 0])])
        assert hnf_gcd_check(I, 2)
        assert not hnf_gcd_check(ideal_from_elements(dedekind, [dedekind.element([4, 0, 0])]), 2)

    def test_quartic_norms(self, quartic):
        assert [frobenius_ideal(quartic, 2, nu).norm for nu in (1, 2, 3, 4)] == [24, 24, 24, 264]

    @pytest.mark.parametrize("name", ["dedekind-cubic", "golden-ratio", "period-7-3"])
    @pytest.mark.parametrize("p", [2, 3])
    def test_frobenius_ideals_are_ideals(self, name, p):
        O = bundled_order(name)
        for nu in (1, 2):
            I = frobenius_ideal(O, p, nu)
            assert I.is_ideal()
            for i in range(1, O.n):
                xi = O.basis(i)
                assert xi ** (p**nu) - xi in I
            assert O.one * ((1 + p) ** (p**nu) - (1 + p)) in I


class TestLambda:
    def test_examples(self, dedekind, quartic):
        assert lambda_profile(dedekind, 2) == (3, 0, 0)
        assert lambda_profile(dedekind, 3) == (0, 0, 1)
        assert lambda_profile(dedekind, 5) == (1, 1, 0)
        assert lambda_profile(quartic, 2) == (3, 0, 0, 0)
        with pytest.raises(ValueError):
            lambda_kappa(dedekind, 2, 4)

    def test_against_field_homomorphisms(self):
        for name in BUNDLED:
            O = bundled_order(name)
            for p in (2, 3):
                profile = lambda_profile(O, p)
                for k in range(1, O.n + 1):
                    if (p**k) ** (O.n - 1) > 5000:
                        continue
                    expected = ext_homomorphisms(O, p, k)
                    assert sum(d * profile[d - 1] for d in divisors(k)) == expected, (name, p, k)

    @pytest.mark.parametrize("name", BUNDLED)
    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_degree_one_count(self, name, p):
        O = bundled_order(name)
        if p ** (O.n - 1) <= 3000:
            assert lambda_profile(O, p)[0] == count_homomorphisms(O, p)

    @pytest.mark.parametrize("name", BUNDLED)
    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_bounded_by_degree(self, name, p):
        profile = lambda_profile(bundled_order(name), p)
        assert all(x >= 0 for x in profile)
        assert sum(k * x for k, x in enumerate(profile, start=1)) <= len(profile)

    @pytest.mark.parametrize("name", BUNDLED)
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_unramified_sum_is_degree(self, name, p):
        O = bundled_order(name)
        if O.disc % p:
            profile = lambda_profile(O, p)
            assert sum(k * x for k, x in enumerate(profile, start=1)) == O.n

    @pytest.mark.parametrize("name", ["dedekind-cubic", "quartic-4.0.13564.1", "period-7-3"])
    def test_basis_invariance(self, name):
        O = bundled_order(name)
        n = O.n
        rng = random.Random(name)
        for _ in range(5):
            # random unimodular change that keeps xi_1 = 1
            U = sympy.eye(n)
            for _ in range(6):
                i, j = rng.sample(range(1, n), 2) if n > 2 else (1, 0)
                U[i, :] = U[i, :] + rng.randint(-2, 2) * U[j, :]
            if rng.random() < 0.5:
                U[1, :] = -U[1, :]
            identity_constants = [[list(O.table[i][j]) for j in range(n)] for i in range(n)]
            from indexdiv.number_field import order_from_structure

            O2 = order_from_structure(identity_constants, U.tolist(), label=name)
            assert O2.disc == O.disc
            for p in (2, 3):
                assert lambda_profile(O2, p) == lambda_profile(O, p)


class TestProbe:
    def test_examples(self, golden, quartic, dedekind):
        g5 = ramification_probe(bundled_order("golden-ratio"), 5)
        assert g5.unramified_witness is None and g5.divides_disc
        g11 = ramification_probe(bundled_order("golden-ratio"), 11)
        assert g11.unramified_witness == 1 and not g11.divides_disc
        q2 = ramification_probe(quartic, 2)
        assert q2.unramified_witness is None and q2.divides_disc
        assert ramification_probe(dedekind, 2).unramified_witness == 1
        assert lambda_profile(bundled_order("golden-ratio"), 11) == (2, 0)

    @pytest.mark.parametrize("name", BUNDLED)
    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
    def test_witness_iff_unramified(self, name, p):
        O = bundled_order(name)
        probe = ramification_probe(O, p)
        assert (probe.unramified_witness is not None) == (not probe.divides_disc)


class TestFactorShape:
    @pytest.mark.parametrize("name", BUNDLED)
    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_witness_shape_matches_profile(self, name, p):
        O = bundled_order(name)
        found = witness_search(O, p, 2)
        if found is None:
            return
        a, _ = found
        shape = factor_shape(O, a, p)
        assert shape_matches_profile(shape, lambda_profile(O, p))
        # cross-check the factorization itself against sympy
        from indexdiv.number_field import charpoly_element

        x = sympy.Symbol("x")
        f = sympy.Poly(sum(c * x**i for i, c in enumerate(charpoly_element(a))), x, modulus=p)
        _, facs = f.factor_list()
        assert sorted((g.degree(), e) for g, e in facs) == shape
