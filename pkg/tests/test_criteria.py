import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BUNDLED, SMALL_PRIMES, bundled_order
from indexdiv.criteria import (
    AnalysisReport,
    analyze,
    factor_shape,
    gbar_table,
    is_cid_counts,
    is_cid_form,
    witness_candidates,
    witness_search,
)
from indexdiv.errors import DomainError, IndexNotCoprime, InternalInconsistency
from indexdiv.number_field import element_index, order_from_power_basis


def quadratic_order(d):
    """Maximal order of Q(sqrt d) for squarefree d."""
    if d % 4 == 1:
        return order_from_power_basis([-d, 0, 1], [[2, 0], [1, 1]], 2, f"Q(sqrt {d})")
    return order_from_power_basis([-d, 0, 1], [[1, 0], [0, 1]], 1, f"Q(sqrt {d})")


class TestGbar:
    def test_examples(self):
        assert gbar_table(2, 5) == (2, 1, 2, 3, 6)
        assert gbar_table(3, 3) == (3, 3, 8)


class TestCandidates:
    def test_order(self):
        got = list(witness_candidates(3, 1))
        assert got[:4] == [(0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
        assert len(got) == 8
        assert all(c[0] == 0 for c in got)

    def test_complete_and_unique(self):
        for n in (2, 3, 4):
            for b in (1, 2, 3):
                got = list(witness_candidates(n, b))
                assert len(got) == len(set(got)) == (2 * b + 1) ** (n - 1) - 1
                norms = [max(map(abs, v)) for v in got]
                assert norms == sorted(norms)


class TestExamples:
    def test_dedekind_two(self, dedekind):
        r = analyze(dedekind, 2)
        assert r.verdict and r.verdict_counts and r.verdict_form
        assert r.failing_degrees == [1]
        assert r.witness is None

    def test_dedekind_three(self, dedekind):
        r = analyze(dedekind, 3)
        assert not r.verdict
        assert r.witness == ((0, 1, 0), 2)
        assert r.factor_shape_of_witness == [(3, 1)]

    def test_quartic_two(self, quartic):
        r = analyze(quartic, 2)
        assert r.verdict and r.failing_degrees == [1]

    def test_period_13_4(self):
        r = analyze(bundled_order("period-13-4"), 3)
        assert r.lambda_profile == (4, 0, 0, 0) and r.verdict

    def test_bad_prime(self, dedekind):
        with pytest.raises(DomainError):
            analyze(dedekind, 4)
        with pytest.raises(DomainError):
            witness_search(dedekind, 3, 0)

    def test_factor_shape_rejects_non_coprime(self, dedekind):
        with pytest.raises(IndexNotCoprime):
            factor_shape(dedekind, dedekind.basis(1), 2)

    def test_report_guards(self):
        base = dict(label="x", p=2, degree=2, disc=5, lambda_profile=(0, 1), gbar_table=(2, 1), failing_degrees=[])
        with pytest.raises(InternalInconsistency):
            AnalysisReport(verdict_counts=True, verdict_form=False, **base)
        with pytest.raises(InternalInconsistency):
            AnalysisReport(verdict_counts=False, verdict_form=False, witness=((0, 1), 4), **base)


SQUAREFREE = [-11, -7, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 13, 17, 21, 33, 41]


@pytest.mark.parametrize("d", SQUAREFREE)
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_quadratic_fields_never(d, p):
    O = quadratic_order(d)
    counts, _ = is_cid_counts(O, p)
    assert not counts and not is_cid_form(O, p)


@pytest.mark.parametrize("name", BUNDLED)
@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_criteria_agree(name, p):
    O = bundled_order(name)
    assert is_cid_counts(O, p)[0] == is_cid_form(O, p)


@pytest.mark.parametrize("name", BUNDLED)
@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_verdict_consistent_with_indices(name, p):
    O = bundled_order(name)
    verdict = is_cid_form(O, p)
    if verdict:
        rng = random.Random(f"{name}-{p}")
        for _ in range(500):
            a = O.element([rng.randint(-30, 30) for _ in range(O.n)])
            assert element_index(a) % p == 0
    else:
        assert witness_search(O, p, 3) is not None


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(BUNDLED), st.sampled_from(SMALL_PRIMES))
def test_report_invariants(name, p):
    r = analyze(bundled_order(name), p, verify=False)
    if r.verdict:
        assert r.witness is None and r.failing_degrees
        assert all(r.lambda_profile[k - 1] > r.gbar_table[k - 1] for k in r.failing_degrees)
    else:
        assert r.witness is not None
        coords, idx = r.witness
        assert idx % p and idx == element_index(bundled_order(name).element(coords))
