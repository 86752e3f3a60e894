"""Two independent tests for "p divides the index of every element".

The counting test compares the number of primes above p of each residue
degree with the number of monic irreducibles of that degree over F_p. The
form test asks whether the index form lies in the divisor system
(p; u_i^p - u_i). Both always run and must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .arith import is_prime
from .errors import DomainError, IndexNotCoprime, InternalInconsistency
from .fp_poly import FpPolynomial, count_irreducible, factor
from .hnf_ideals import lambda_profile
from .multipoly import DivisorSystem, in_system
from .number_field import Order, OrderElement, charpoly_element, element_index, index_form
from .supplementary import SupplementaryReport, supplementary_report

__all__ = [
    "AnalysisReport",
    "analyze",
    "factor_shape",
    "gbar_table",
    "is_cid_counts",
    "is_cid_form",
    "shape_matches_profile",
    "witness_candidates",
    "witness_search",
]

DEFAULT_WITNESS_BOUND = 3


def gbar_table(p: int, n: int) -> tuple[int, ...]:
    return tuple(count_irreducible(p, k) for k in range(1, n + 1))


def is_cid_counts(O: Order, p: int, profile=None) -> tuple[bool, list[int]]:
    """True with the failing degrees if some lambda_k exceeds the irreducible count."""
    if profile is None:
        profile = lambda_profile(O, p)
    gbar = gbar_table(p, O.n)
    failing = [k for k, (lam, g) in enumerate(zip(profile, gbar), start=1) if lam > g]
    return bool(failing), failing


def is_cid_form(O: Order, p: int) -> bool:
    delta = index_form(O)
    return in_system(delta, DivisorSystem(p, 1, delta.nvars))


def _rank(v):
    # 0, 1, -1, 2, -2, ...
    return 2 * v - 1 if v > 0 else -2 * v


def witness_candidates(n: int, bound: int):
    """Coordinate vectors with first entry 0, graded by sup norm.

    Within one sup norm: fewer nonzero coordinates first, then earlier basis
    elements and positive signs first.
    """
    for m in range(1, bound + 1):
        level = [
            (0,) + tail
            for tail in itertools.product(range(-m, m + 1), repeat=n - 1)
            if max(map(abs, tail)) == m
        ]
        level.sort(key=lambda v: (sum(1 for x in v if x), sum(map(abs, v)), [_rank(x) for x in reversed(v)]))
        yield from level


def witness_search(O: Order, p: int, bound: int = DEFAULT_WITNESS_BOUND):
    """First element (in :func:`witness_candidates` order) whose index is prime to p."""
    if bound < 1:
        raise DomainError("witness bound must be >= 1")
    for coords in witness_candidates(O.n, bound):
        a = O.element(coords)
        idx = element_index(a)
        if idx and gcd(idx, p) == 1:
            return a, idx
    return None


def factor_shape(O: Order, a: OrderElement, p: int) -> list[tuple[int, int]]:
    """Sorted (degree, multiplicity) of the irreducible factors of a's charpoly mod p."""
    idx = element_index(a)
    if gcd(idx, p) != 1:
        raise IndexNotCoprime(f"index {idx} of {a.coords} is not prime to {p}")
    f = FpPolynomial(p, tuple(charpoly_element(a)))
    return sorted((g.degree, e) for g, e in factor(f))


def shape_matches_profile(shape, profile) -> bool:
    counts = [0] * len(profile)
    for deg, _ in shape:
        counts[deg - 1] += 1
    return tuple(counts) == tuple(profile)


@dataclass
class AnalysisReport:
    label: str
    p: int
    degree: int
    disc: int
    lambda_profile: tuple
    gbar_table: tuple
    verdict_counts: bool
    verdict_form: bool
    failing_degrees: list
    witness: tuple | None = None  # (coords, index)
    factor_shape_of_witness: list | None = None
    supplementary: SupplementaryReport | None = field(default=None)

    def __post_init__(self):
        if self.verdict_counts != self.verdict_form:
            raise InternalInconsistency(
                f"criteria disagree for p = {self.p} in {self.label}: "
                f"counts {self.verdict_counts}, form {self.verdict_form}"
            )
        if self.witness is not None:
            if self.verdict:
                raise InternalInconsistency("a coprime-index witness exists for a common index divisor")
            if gcd(self.witness[1], self.p) != 1:
                raise InternalInconsistency("witness index is not prime to p")

    @property
    def verdict(self) -> bool:
        return self.verdict_counts


def analyze(O: Order, p: int, bound: int = DEFAULT_WITNESS_BOUND, verify: bool = True) -> AnalysisReport:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    delta = index_form(O)
    profile = lambda_profile(O, p)
    counts, failing = is_cid_counts(O, p, profile)
    form = is_cid_form(O, p)
    witness = shape = None
    if counts == form and not counts:
        found = witness_search(O, p, bound)
        if found is not None:
            a, idx = found
            witness = (a.coords, idx)
            shape = factor_shape(O, a, p)
            if not shape_matches_profile(shape, profile):
                raise InternalInconsistency(
                    f"factor shape {shape} of witness disagrees with prime counts {profile}"
                )
    return AnalysisReport(
        label=O.label,
        p=p,
        degree=O.n,
        disc=O.disc,
        lambda_profile=profile,
        gbar_table=gbar_table(p, O.n),
        verdict_counts=counts,
        verdict_form=form,
        failing_degrees=failing,
        witness=witness,
        factor_shape_of_witness=shape,
        supplementary=supplementary_report(O, p, verify=verify, delta=delta),
    )
