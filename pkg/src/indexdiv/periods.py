"""Gaussian-period orders and the cubic-period criterion for p = 2.

All arithmetic happens exactly in Z[zeta], zeta a primitive nu-th root of
unity, using the Z-basis zeta, zeta^2, ..., zeta^{nu-1}. Each period is a
sum over one coset of the index-lambda subgroup of (Z/nu)^*, so the periods
partition that basis and products re-express in periods by reading one
coefficient per coset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .arith import factorint, is_prime, primitive_root
from .errors import InternalInconsistency, NoRepresentation, NotDivisor, NotPrime
from .number_field import Order, charpoly_element, order_from_structure

__all__ = [
    "CubicDecomposition",
    "CubicSurvey",
    "PeriodFieldSpec",
    "cubic_decomposition",
    "cubic_survey",
    "period_basis_in_power_basis",
    "period_min_poly",
    "period_order",
    "two_is_cid_cubic",
]

# published list of such primes below 200; the last entry is composite
CLASSICAL_LIST = (31, 43, 109, 127, 157, 189)


@dataclass(frozen=True)
class PeriodFieldSpec:
    nu: int
    lam: int
    g: int | None = None

    def __post_init__(self):
        if not is_prime(self.nu) or self.nu == 2:
            raise NotPrime(f"conductor {self.nu} is not an odd prime")
        if self.lam < 1 or (self.nu - 1) % self.lam:
            raise NotDivisor(f"degree {self.lam} does not divide {self.nu - 1}")
        g = primitive_root(self.nu) if self.g is None else self.g
        if any(pow(g, (self.nu - 1) // q, self.nu) == 1 for q in factorint(self.nu - 1)):
            raise NotPrime(f"{g} is not a primitive root mod {self.nu}")
        object.__setattr__(self, "g", g)

    @property
    def period_length(self):
        return (self.nu - 1) // self.lam


def _coset_index(spec):
    """Map residue r != 0 mod nu to the period containing zeta^r."""
    nu, lam, g = spec.nu, spec.lam, spec.g
    idx = [None] * nu
    x = 1
    for m in range(nu - 1):
        idx[x] = m % lam
        x = x * g % nu
    return idx


def period_structure_constants(spec: PeriodFieldSpec):
    """Products eta_i * eta_j as integer vectors in the basis eta_0..eta_{lam-1}."""
    nu, lam = spec.nu, spec.lam
    idx = _coset_index(spec)
    cosets = [[r for r in range(1, nu) if idx[r] == j] for j in range(lam)]
    table = []
    for i in range(lam):
        row = []
        for j in range(lam):
            counts = [0] * nu
            for a in cosets[i]:
                for b in cosets[j]:
                    counts[(a + b) % nu] += 1
            # 1 = -(zeta + ... + zeta^{nu-1}) = -(eta_0 + ... + eta_{lam-1})
            vec = []
            for k in range(lam):
                vals = {counts[r] for r in cosets[k]}
                if len(vals) != 1:
                    raise InternalInconsistency("product is not constant on a coset")
                vec.append(vals.pop() - counts[0])
            row.append(vec)
        table.append(row)
    return table


def period_order(spec: PeriodFieldSpec) -> Order:
    """The ring of integers of the degree-lambda subfield, basis (1, eta_1, ..., eta_{lam-1})."""
    lam, nu = spec.lam, spec.nu
    if lam < 2:
        raise NotDivisor("period fields need degree >= 2")
    constants = period_structure_constants(spec)
    new_basis = [[-1] * lam] + [[int(k == j) for k in range(lam)] for j in range(1, lam)]
    O = order_from_structure(constants, new_basis, label=f"period-{nu}-{lam}")
    # the subfield is totally real iff -1 lies in the subgroup, i.e. the period length is even
    r2 = 0 if spec.period_length % 2 == 0 else lam // 2
    expected = (-1) ** r2 * nu ** (lam - 1)
    if O.disc != expected:
        raise InternalInconsistency(f"discriminant {O.disc} != {expected}")
    return O


def period_min_poly(spec: PeriodFieldSpec) -> list[int]:
    """Minimal polynomial of eta_1 (lowest degree first)."""
    O = period_order(spec)
    return charpoly_element(O.basis(1))


def period_basis_in_power_basis(O: Order):
    """Coordinates of the order's basis in the power basis of xi_2.

    Returns ``(min_poly, numerators, denominator)`` ready for a field file.
    """
    from fractions import Fraction
    from math import lcm

    from .linalg import rational_inverse
    from .number_field import power_rows

    gen = O.basis(1)
    P = power_rows(gen)  # row j: coordinates of gen^j in the order basis
    inv = rational_inverse(P)  # row i: basis element i in powers of gen
    den = lcm(*(Fraction(x).denominator for row in inv for x in row))
    nums = [[int(x * den) for x in row] for row in inv]
    return charpoly_element(gen), nums, den


@dataclass(frozen=True)
class CubicDecomposition:
    nu: int
    alpha: int
    beta: int
    A: int
    B: int

    def __post_init__(self):
        if self.nu != self.alpha**2 - 3 * self.alpha * self.beta + 9 * self.beta**2:
            raise InternalInconsistency("nu != alpha^2 - 3 alpha beta + 9 beta^2")
        if 4 * self.nu != self.A**2 + 27 * self.B**2:
            raise InternalInconsistency("4 nu != A^2 + 27 B^2")


def cubic_decomposition(nu: int) -> CubicDecomposition:
    """The representation 4 nu = A^2 + 27 B^2 with A = 1 mod 3 and B > 0."""
    if not is_prime(nu) or nu % 3 != 1:
        raise NotPrime(f"{nu} is not a prime congruent to 1 mod 3")
    for B in range(1, isqrt(4 * nu // 27) + 1):
        rest = 4 * nu - 27 * B * B
        A = isqrt(rest)
        if A * A == rest:
            if A % 3 != 1:
                A = -A
            return CubicDecomposition(nu, (A + 3 * B) // 2, B, A, B)
    raise NoRepresentation(f"no representation 4*{nu} = A^2 + 27 B^2")


def two_is_cid_cubic(nu: int) -> bool:
    """2 is a common index divisor of the cubic period field iff B is even."""
    return cubic_decomposition(nu).B % 2 == 0


@dataclass
class CubicSurvey:
    limit: int
    members: list[int]
    rows: list[dict] = field(default_factory=list)
    note: str = ""


def cubic_survey(limit: int) -> CubicSurvey:
    """Primes nu = 1 mod 3 up to ``limit`` whose cubic period field has 2 as index divisor.

    Every candidate is checked three ways: parity of B, and both general
    criteria on the constructed cubic period order at p = 2.
    """
    from .criteria import is_cid_counts, is_cid_form

    if limit < 7:
        raise ValueError("limit must be at least 7")
    members, rows = [], []
    for nu in range(7, limit + 1, 6):
        if not is_prime(nu):
            continue
        dec = cubic_decomposition(nu)
        parity = dec.B % 2 == 0
        O = period_order(PeriodFieldSpec(nu, 3))
        counts, _ = is_cid_counts(O, 2)
        form = is_cid_form(O, 2)
        if not parity == counts == form:
            raise InternalInconsistency(
                f"nu = {nu}: parity {parity}, counts {counts}, form {form} disagree"
            )
        rows.append({"nu": nu, "A": dec.A, "B": dec.B, "parity": parity, "counts": counts, "form": form})
        if parity:
            members.append(nu)
    return CubicSurvey(limit, members, rows, _discrepancy_note(members, limit))


def _discrepancy_note(members, limit):
    listed = [x for x in CLASSICAL_LIST if x <= limit]
    missing = [x for x in listed if x not in members]
    unlisted = [x for x in members if x < 200 and x not in listed]
    parts = []
    for x in missing:
        if not is_prime(x):
            parts.append(f"{x} is listed in the classical table but is not prime ({_factor_str(x)})")
        else:
            parts.append(f"{x} is listed in the classical table but fails the criterion")
    for x in unlisted:
        parts.append(f"{x} satisfies the criterion but is absent from the classical table")
    return "; ".join(parts)


def _factor_str(m):
    return " * ".join(f"{q}^{e}" if e > 1 else str(q) for q, e in sorted(factorint(m).items()))
