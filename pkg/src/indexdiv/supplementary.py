"""Smallest prime-conductor period field that removes a common index divisor.

The index form is tested against the divisor systems
P_k = (p; u_i^{p^k} - u_i). The maximal members k_1..k_l of the divisor-closed
set of k with index_form in P_k determine F(p) = prod(p^{k_i} - 1); the first
prime nu (other than p) not dividing F(p) gives the cyclotomic field, and the
largest divisor mu of nu - 1 with nu not dividing F(p^mu) gives its smallest
working subfield, of degree (nu - 1) / mu.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .arith import divisors, is_prime, multiplicative_order, next_prime
from .errors import CapacityError, ClosureViolation, DomainError, InternalInconsistency
from .fp_poly import ENUMERATION_GUARD, ExtFieldCtx
from .multipoly import DivisorSystem, MPoly, eval_grid, eval_over_ext, in_system
from .number_field import Order, index_form

__all__ = [
    "SupplementaryReport",
    "find_mu_lambda",
    "find_nu",
    "membership_indices",
    "minimal_index_set",
    "residue_degree",
    "supplementary_report",
    "verify_supplementary",
]


def membership_indices(O: Order, p: int, delta: MPoly | None = None) -> list[int]:
    """All k with the index form in P_k.

    Once p^k exceeds every single-variable exponent no exponent folds, and a
    primitive form cannot vanish mod p, so the scan stops there.
    """
    if delta is None:
        delta = index_form(O)
    bound = delta.max_var_exponent()
    ks = []
    k = 1
    while p**k <= bound:
        if in_system(delta, DivisorSystem(p, k, delta.nvars)):
            ks.append(k)
        k += 1
    return ks


def minimal_index_set(ks) -> list[int]:
    """Maximal elements of a divisor-closed set under divisibility."""
    ks = sorted(set(ks))
    members = set(ks)
    for k in ks:
        missing = [d for d in divisors(k) if d not in members]
        if missing:
            raise ClosureViolation(f"{k} is in the set but its divisors {missing} are not")
    return [k for k in ks if not any(m != k and m % k == 0 for m in ks)]


def find_nu(p: int, minimal_ks) -> tuple[int, int | None]:
    """``(F(p), nu)``; nu is None for an empty index set (rationals suffice)."""
    F = prod(p**k - 1 for k in minimal_ks)
    if not minimal_ks:
        return F, None
    nu = 2
    while nu == p or F % nu == 0:
        nu = next_prime(nu)
    return F, nu


def find_mu_lambda(p: int, minimal_ks, nu: int | None) -> tuple[int | None, int]:
    """Period length mu and field degree lambda = (nu - 1) / mu."""
    if nu is None:
        return None, 1
    for mu in reversed(divisors(nu - 1)):
        if prod(p ** (mu * k) - 1 for k in minimal_ks) % nu:
            return mu, (nu - 1) // mu
    raise InternalInconsistency(f"no admissible period length for nu = {nu}")


def residue_degree(p: int, nu: int | None, lam: int) -> int:
    """Degree of the primes above p in the degree-lambda subfield of Q(zeta_nu)."""
    if nu is None:
        return 1
    return multiplicative_order(pow(p, (nu - 1) // lam, nu), nu)


@dataclass
class Verification:
    status: str  # "verified", "unverified" or "failed"
    residue_degree: int
    point: list[list[int]] | None = None
    modulus: list[int] | None = None
    value: list[int] | None = None


def verify_supplementary(
    O: Order, p: int, nu: int | None, lam: int, delta: MPoly | None = None, guard: int = ENUMERATION_GUARD
) -> Verification:
    """Check that the index form is not in P_k' and exhibit a non-vanishing point.

    k' is the residue degree of p in the candidate field. Points are elements
    of F_{p^k'}^n, reported as coefficient lists over the field's modulus.
    """
    if delta is None:
        delta = index_form(O)
    k = residue_degree(p, nu, lam)
    if in_system(delta, DivisorSystem(p, k, delta.nvars)):
        return Verification("failed", k)
    ctx = ExtFieldCtx(p, k)
    try:
        values = eval_grid(delta, ctx, guard)
    except CapacityError:
        return Verification("unverified", k)
    nonzero = values.nonzero()[0]
    if len(nonzero) == 0:
        return Verification("failed", k)
    i = int(nonzero[0])
    q = ctx.order
    point = [ctx.decode((i // q**j) % q) for j in range(delta.nvars)]
    value = eval_over_ext(delta, ctx, point)
    if value.is_zero():
        raise InternalInconsistency("grid and direct evaluation disagree")
    return Verification(
        "verified",
        k,
        point=[list(z.coeffs) for z in point],
        modulus=list(ctx.modulus.coeffs),
        value=list(value.coeffs),
    )


@dataclass
class SupplementaryReport:
    membership_ks: list[int]
    minimal_ks: list[int]
    F_p: int
    nu: int | None
    mu: int | None
    lam: int
    description: str
    defining_poly: list[int] | None = None
    verification: Verification | None = field(default=None)

    def is_rational(self):
        return self.nu is None


def describe(nu, lam):
    if nu is None:
        return "rationals"
    return f"degree-{lam} subfield of the {_ordinal(nu)} cyclotomic field"


def _ordinal(m):
    suffix = "th" if 10 <= m % 100 <= 20 else {1: "st", 2: "nd", 3: "rd"}.get(m % 10, "th")
    return f"{m}{suffix}"


def supplementary_report(O: Order, p: int, verify: bool = True, delta: MPoly | None = None) -> SupplementaryReport:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if delta is None:
        delta = index_form(O)
    ks = membership_indices(O, p, delta)
    minimal = minimal_index_set(ks)
    F, nu = find_nu(p, minimal)
    mu, lam = find_mu_lambda(p, minimal, nu)
    poly = None
    if nu is not None:
        from .periods import PeriodFieldSpec, period_min_poly

        poly = period_min_poly(PeriodFieldSpec(nu, lam))
    report = SupplementaryReport(ks, minimal, F, nu, mu, lam, describe(nu, lam), poly)
    if verify:
        report.verification = verify_supplementary(O, p, nu, lam, delta)
    return report
