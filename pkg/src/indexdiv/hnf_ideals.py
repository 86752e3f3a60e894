"""Ideals of an order as integer lattices in row Hermite normal form.

The count of distinct prime divisors of p of each residue degree is read off
from norms of the Frobenius ideals I_nu = (xi_i^{p^nu} - xi_i), combined by
Moebius inversion. Only integral ideals are ever formed; quotients of forms
become differences of p-adic valuations of norms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import lcm

from .arith import divisors, moebius, vp
from .errors import NonIntegralLambda, RankDeficient, ShapeError
from .number_field import Order, OrderElement, elt_pow

__all__ = [
    "HnfLattice",
    "frobenius_ideal",
    "hnf",
    "ideal_from_elements",
    "lambda_kappa",
    "lambda_profile",
    "lattice_norm",
    "ramification_probe",
    "vp",
]


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``g = gcd(a, b) = a*x + b*y`` and ``g >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _echelon(rows, n, modulus):
    A = [r for r in rows if any(r)]
    basis = []
    for c in range(n):
        piv = None
        rest = []
        for r in A:
            if r[c] == 0:
                rest.append(r)
            elif piv is None:
                piv = r
            else:
                # unimodular 2x2 step: piv <- x*piv + y*r, r <- (a*r - b*piv)/g
                a, b = piv[c], r[c]
                g, x, y = xgcd(a, b)
                new_piv = [x * s + y * t for s, t in zip(piv, r)]
                r = [(a // g) * t - (b // g) * s for s, t in zip(piv, r)]
                piv = new_piv
                if modulus is not None:
                    piv = piv[: c + 1] + [v % modulus for v in piv[c + 1 :]]
                    r = [v % modulus for v in r]
                if any(r):
                    rest.append(r)
        if piv is None:
            raise RankDeficient(f"no pivot in column {c}")
        if piv[c] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        A = rest
    return basis


def hnf(rows, ncols: int | None = None, modulus: int | None = None):
    """Row Hermite normal form of a full-rank integer lattice.

    Returns an upper-triangular n x n matrix with positive diagonal and
    entries above each pivot reduced into ``[0, pivot)``. If ``modulus`` is
    given, the caller promises ``modulus * Z^n`` lies in the lattice; rows are
    then reduced mod ``modulus`` along the way to keep entries small.
    """
    rows = [list(map(int, r)) for r in rows]
    if ncols is None:
        if not rows:
            raise RankDeficient("no generators")
        ncols = len(rows[0])
    n = ncols
    if any(len(r) != n for r in rows):
        raise ShapeError("rows have inconsistent length")
    if modulus is None:
        basis = _echelon(rows, n, None)
    else:
        scaled = [[modulus * int(i == j) for j in range(n)] for i in range(n)]
        rows = [[x % modulus for x in r] for r in rows] + scaled
        # reducing mod the modulus only preserves span + modulus*Z^n, so add it back
        basis = _echelon(_echelon(rows, n, modulus) + scaled, n, None)
    # ascending, so later reductions never touch an already reduced column
    for c in range(n):
        pc = basis[c][c]
        for r in range(c):
            q = basis[r][c] // pc
            if q:
                basis[r] = [x - q * y for x, y in zip(basis[r], basis[c])]
    return [tuple(r) for r in basis]


@dataclass(frozen=True, eq=False)
class HnfLattice:
    order: Order
    basis: tuple

    def __post_init__(self):
        n = self.order.n
        B = self.basis
        if len(B) != n:
            raise ShapeError("basis must be n x n")
        for i in range(n):
            if B[i][i] <= 0:
                raise RankDeficient("non-positive pivot")
            for j in range(i):
                if B[i][j] != 0:
                    raise ShapeError("basis is not upper triangular")
            for r in range(i):
                if not 0 <= B[r][i] < B[i][i]:
                    raise ShapeError("entry above pivot not reduced")

    def __eq__(self, other):
        return isinstance(other, HnfLattice) and self.basis == other.basis and self.order == other.order

    def __hash__(self):
        return hash(self.basis)

    @property
    def norm(self):
        return lattice_norm(self)

    def __contains__(self, v):
        coords = v.coords if isinstance(v, OrderElement) else tuple(v)
        x = list(coords)
        for i, row in enumerate(self.basis):
            if x[i] % row[i]:
                return False
            q = x[i] // row[i]
            x = [a - q * b for a, b in zip(x, row)]
        return not any(x)

    def is_ideal(self):
        O = self.order
        return all(
            (OrderElement(O, row) * O.basis(j)) in self for row in self.basis for j in range(O.n)
        )


def ideal_from_elements(O: Order, gens, modulus: int | None = None) -> HnfLattice:
    """The ideal generated by ``gens``: HNF of all products g * xi_j."""
    rows = []
    for g in gens:
        if not isinstance(g, OrderElement):
            g = O.element(g) if not isinstance(g, int) else g * O.one
        for j in range(O.n):
            rows.append((g * O.basis(j)).coords)
    if not rows:
        raise RankDeficient("no generators")
    return HnfLattice(O, tuple(hnf(rows, O.n, modulus)))


def lattice_norm(L: HnfLattice) -> int:
    return reduce(lambda a, b: a * b, (L.basis[i][i] for i in range(len(L.basis))), 1)


def frobenius_ideal(O: Order, p: int, nu: int) -> HnfLattice:
    """Ideal generated by xi_i^{p^nu} - xi_i (i >= 2) and (1+p)^{p^nu} - (1+p)."""
    e = p**nu
    N = (1 + p) ** e - (1 + p)
    gens = []
    for i in range(1, O.n):
        xi = O.basis(i)
        # N lies in the ideal, so the powers may be reduced mod N
        gens.append(elt_pow(xi, e, modulus=N) - xi)
    gens.append(N * O.one)
    return ideal_from_elements(O, gens, modulus=N)


def _vp_norm(O, p, d, cache):
    if d not in cache:
        cache[d] = vp(lattice_norm(frobenius_ideal(O, p, d)), p)
    return cache[d]


def lambda_kappa(O: Order, p: int, kappa: int, _cache: dict | None = None) -> int:
    """Number of distinct prime divisors of p with residue degree ``kappa``."""
    if not 1 <= kappa <= O.n:
        raise ValueError(f"kappa must lie in 1..{O.n}")
    cache = {} if _cache is None else _cache
    L = sum(moebius(kappa // d) * _vp_norm(O, p, d, cache) for d in divisors(kappa))
    if L < 0 or L % kappa:
        raise NonIntegralLambda(f"L_{kappa} = {L} for p = {p} in {O.label or O}")
    return L // kappa


def lambda_profile(O: Order, p: int) -> tuple[int, ...]:
    cache: dict = {}
    return tuple(lambda_kappa(O, p, k, cache) for k in range(1, O.n + 1))


@dataclass(frozen=True)
class RamificationProbe:
    unramified_witness: int | None
    divides_disc: bool


def ramification_probe(O: Order, p: int) -> RamificationProbe:
    """First nu in 1..lcm(1..n) with xi_i^{p^nu} = xi_i mod p for all i, if any."""
    bound = reduce(lcm, range(1, O.n + 1), 1)
    basis = [O.basis(i) for i in range(1, O.n)]
    # iterate Frobenius mod p: x -> x^p
    current = [b.reduce_mod(p) for b in basis]
    witness = None
    for nu in range(1, bound + 1):
        current = [elt_pow(x, p, modulus=p) for x in current]
        if all(x == b.reduce_mod(p) for x, b in zip(current, basis)):
            witness = nu
            break
    return RamificationProbe(witness, O.disc % p == 0)


def hnf_gcd_check(L: HnfLattice, p: int) -> bool:
    """True if ``p * O`` is contained in ``L``."""
    return all(tuple(p * int(i == j) for j in range(L.order.n)) in L for i in range(L.order.n))


__all__ += ["RamificationProbe", "hnf_gcd_check"]
