"""Sparse multivariate polynomials with exact integer coefficients.

Variables are addressed by position. When a polynomial carries the
distinguished variable ``w`` of a characteristic polynomial it sits at
index 0, with the form variables ``u_1..u_n`` at indices 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Mapping, Sequence

from .errors import DomainError, ShapeError
from .fp_poly import ExtFieldCtx, FpPolynomial

__all__ = [
    "DivisorSystem",
    "MPoly",
    "charpoly_matrix",
    "disc_in_w",
    "eval_over_ext",
    "in_system",
    "mp_arith",
    "mp_content",
    "mp_det",
    "reduce_mod_system",
    "resultant_in",
]


class MPoly:
    """Immutable sparse polynomial: ``terms`` maps exponent tuples to nonzero ints."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, int] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    if len(exps) != nvars:
                        raise ShapeError(f"exponent {exps} does not have length {nvars}")
                    clean[tuple(exps)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int, nvars: int) -> "MPoly":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def var(cls, i: int, nvars: int, power: int = 1) -> "MPoly":
        exps = [0] * nvars
        exps[i] = power
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def from_terms(cls, nvars, pairs):
        """Build from ``(coefficient, exponent tuple)`` pairs, summing repeats."""
        acc = {}
        for c, exps in pairs:
            exps = tuple(exps)
            acc[exps] = acc.get(exps, 0) + c
        return cls(nvars, acc)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise DomainError("polynomial is not constant")
        return self._terms.get((0,) * self.nvars, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other, self.nvars)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, int):
            return MPoly.const(other, self.nvars)
        if not isinstance(other, MPoly):
            raise TypeError(f"cannot combine MPoly with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ShapeError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MPoly.zero(self.nvars)
            return MPoly._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
        return MPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative exponent")
        result = MPoly.const(1, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div_int(self, d: int) -> "MPoly":
        if any(c % d for c in self._terms.values()):
            raise DomainError(f"not divisible by {d}")
        return MPoly._raw(self.nvars, {e: c // d for e, c in self._terms.items()})

    def total_degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self._terms), default=-1)

    def max_var_exponent(self):
        """Largest exponent of any single variable in any term."""
        return max((max(e) for e in self._terms if e), default=0)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def leading_term(self):
        """``(exponents, coeff)`` of the lexicographically largest monomial."""
        if not self._terms:
            raise DomainError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def coeffs_in(self, i) -> list["MPoly"]:
        """Coefficients of ``x_i^0, x_i^1, ...`` as polynomials without variable i."""
        deg = self.degree_in(i)
        parts: list[dict] = [{} for _ in range(deg + 1)]
        for e, c in self._terms.items():
            parts[e[i]][e[:i] + e[i + 1 :]] = c
        return [MPoly._raw(self.nvars - 1, t) for t in parts]

    def insert_var(self, i) -> "MPoly":
        """Embed into ``nvars + 1`` variables with a fresh variable at position i."""
        return MPoly._raw(
            self.nvars + 1, {e[:i] + (0,) + e[i:]: c for e, c in self._terms.items()}
        )

    def drop_var(self, i) -> "MPoly":
        if self.degree_in(i) > 0:
            raise DomainError(f"variable {i} occurs in the polynomial")
        return MPoly._raw(self.nvars - 1, {e[:i] + e[i + 1 :]: c for e, c in self._terms.items()})

    def __call__(self, *point):
        """Evaluate at integer (or any ring) values, one per variable."""
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        if len(point) != self.nvars:
            raise ShapeError(f"expected {self.nvars} values, got {len(point)}")
        total = 0
        for e, c in self._terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            total = total + t
        return total

    def substitute(self, values: Sequence["MPoly"]) -> "MPoly":
        """Replace each variable i by ``values[i]`` (all in a common ring)."""
        if len(values) != self.nvars:
            raise ShapeError("one value per variable required")
        target = values[0].nvars if values else 0
        total = MPoly.zero(target)
        cache: dict = {}
        for e, c in self._terms.items():
            t = MPoly.const(c, target)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = values[i] ** k
                    t = t * cache[key]
            total = total + t
        return total

    def map_coeffs(self, fn):
        return MPoly(self.nvars, {e: fn(c) for e, c in self._terms.items()})

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"u{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            a = abs(c)
            body = (str(a) if not mono else (mono if a == 1 else f"{a}*{mono}"))
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.to_str()})"


def mp_arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    if a.nvars != b.nvars:
        raise ShapeError(f"nvars mismatch: {a.nvars} vs {b.nvars}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown operation {op!r}")


def mp_content(f: MPoly) -> int:
    """gcd of the coefficients, 0 for the zero polynomial."""
    return reduce(gcd, (abs(c) for _, c in f.items()), 0)


def _check_square(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise ShapeError("matrix is not square")
    return n


def mp_det(M: Sequence[Sequence[MPoly]], nvars: int | None = None) -> MPoly:
    """Exact determinant of a square matrix of polynomials.

    Laplace expansion with every minor memoized by its column set, so an
    n x n determinant costs O(n 2^n) polynomial products. Rows are processed
    sparsest first.
    """
    n = _check_square(M)
    if nvars is None:
        nvars = next((x.nvars for row in M for x in row if isinstance(x, MPoly)), 0)
    rows = [[x if isinstance(x, MPoly) else MPoly.const(x, nvars) for x in row] for row in M]
    if any(x.nvars != nvars for row in rows for x in row):
        raise ShapeError("entries have inconsistent nvars")
    if n == 0:
        return MPoly.const(1, nvars)

    order = sorted(range(n), key=lambda r: sum(1 for x in rows[r] if not x.is_zero()))
    sign = _perm_sign(order)
    rows = [rows[r] for r in order]

    memo: dict = {}

    def minor(depth, cols):
        if depth == n:
            return MPoly.const(1, nvars)
        key = cols
        if key in memo:
            return memo[key]
        total = MPoly.zero(nvars)
        row = rows[depth]
        for pos, c in enumerate(cols):
            entry = row[c]
            if entry.is_zero():
                continue
            sub = minor(depth + 1, cols[:pos] + cols[pos + 1 :])
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    det = minor(0, tuple(range(n)))
    return -det if sign < 0 else det


def _perm_sign(perm):
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def charpoly_matrix(M: Sequence[Sequence[MPoly]]) -> MPoly:
    """``det(w I - M)`` with w prepended as variable 0."""
    n = _check_square(M)
    nvars = M[0][0].nvars if n else 0
    w = MPoly.var(0, nvars + 1)
    shifted = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = -M[i][j].insert_var(0)
            if i == j:
                entry = entry + w
            row.append(entry)
        shifted.append(row)
    return mp_det(shifted, nvars + 1)


def resultant_in(f: MPoly, g: MPoly, var: int = 0) -> MPoly:
    """Sylvester resultant of f and g with respect to variable ``var``."""
    a = f.coeffs_in(var)
    b = g.coeffs_in(var)
    m, n = len(a) - 1, len(b) - 1
    nv = f.nvars - 1
    if m < 0 or n < 0:
        return MPoly.zero(nv)
    size = m + n
    if size == 0:
        return MPoly.const(1, nv)
    zero = MPoly.zero(nv)
    S = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        S.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        S.append(row)
    return mp_det(S, nv)


def _derivative(f: MPoly, var: int) -> MPoly:
    out = {}
    for e, c in f.items():
        k = e[var]
        if k:
            out[e[:var] + (k - 1,) + e[var + 1 :]] = c * k
    return MPoly(f.nvars, out)


def disc_in_w(f: MPoly, var: int = 0) -> MPoly:
    """Discriminant of a polynomial monic in ``var``: ``(-1)^{n(n-1)/2} Res(f, f')``.

    The result no longer carries variable ``var``.
    """
    coeffs = f.coeffs_in(var)
    n = len(coeffs) - 1
    if n < 2:
        raise DomainError("discriminant needs degree >= 2")
    if coeffs[-1] != MPoly.const(1, f.nvars - 1):
        raise DomainError("polynomial is not monic in the chosen variable")
    res = resultant_in(f, _derivative(f, var), var)
    return -res if (n * (n - 1) // 2) % 2 else res


@dataclass(frozen=True)
class DivisorSystem:
    """The module (p; u_1^{p^k} - u_1, ..., u_n^{p^k} - u_n)."""

    p: int
    k: int
    n: int

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("degree index k must be >= 1")
        if self.p < 2:
            raise DomainError("p must be prime")

    @property
    def q(self):
        return self.p**self.k


def fold_exponent(e: int, q: int) -> int:
    """Representative of u^e modulo u^q - u, kept in [1, q-1] for e >= 1."""
    if e < q:
        return e
    return (e - 1) % (q - 1) + 1


def reduce_mod_system(f: MPoly, sys: DivisorSystem) -> MPoly:
    q, p = sys.q, sys.p
    out: dict = {}
    for e, c in f.items():
        r = tuple(fold_exponent(k, q) for k in e)
        out[r] = (out.get(r, 0) + c) % p
    return MPoly(f.nvars, out)


def in_system(f: MPoly, sys: DivisorSystem) -> bool:
    return reduce_mod_system(f, sys).is_zero()


def eval_over_ext(f: MPoly, ctx: ExtFieldCtx, point: Sequence) -> FpPolynomial:
    """Evaluate ``f`` at a point of F_{p^k}^n, coefficients read mod p."""
    if len(point) != f.nvars:
        raise ShapeError(f"expected {f.nvars} coordinates, got {len(point)}")
    pt = [ctx.element(z) for z in point]
    cache: dict = {}
    total = ctx.zero
    for e, c in f.items():
        c %= ctx.p
        if not c:
            continue
        t = ctx.element(c)
        for i, k in enumerate(e):
            if k:
                key = (i, k)
                if key not in cache:
                    cache[key] = ctx.pow(pt[i], k)
                t = ctx.mul(t, cache[key])
        total = total + t
    return total % ctx.modulus


def eval_grid(f: MPoly, ctx: ExtFieldCtx, guard: int = 1 << 20):
    """Values of ``f`` at every point of F_{p^k}^n, as integer codes.

    Point number ``i`` has coordinate ``j`` equal to ``ctx.decode((i // q**j) % q)``.
    Vectorised with discrete-log tables; ``guard`` caps q**n.
    """
    import numpy as np

    from .errors import CapacityError

    q, p, k, n = ctx.order, ctx.p, ctx.k, f.nvars
    if q**n > guard:
        raise CapacityError(f"{q}^{n} points exceed the evaluation guard {guard}")
    log, exp = ctx.log_tables()
    log = np.asarray(log, dtype=np.int64)
    exp = np.asarray(exp, dtype=np.int64)
    digits_of = np.array([ctx.decode(c).coeffs + (0,) * (k - len(ctx.decode(c).coeffs)) for c in range(q)], dtype=np.int64)
    weights = p ** np.arange(k, dtype=np.int64)
    idx = np.arange(q**n, dtype=np.int64)
    coords = [(idx // q**j) % q for j in range(n)]
    logs = [log[c] for c in coords]
    nonzero = [c != 0 for c in coords]
    acc = np.zeros((q**n, k), dtype=np.int64)
    for e, c in f.items():
        c %= p
        if not c:
            continue
        lg = np.zeros(q**n, dtype=np.int64)
        mask = np.ones(q**n, dtype=bool)
        for j, ej in enumerate(e):
            if ej:
                lg += ej * logs[j]
                mask &= nonzero[j]
        code = np.where(mask, exp[lg % (q - 1)], 0)
        acc += c * digits_of[code]
    acc %= p
    return acc @ weights


def vanishes_on_ext(f: MPoly, ctx: ExtFieldCtx, guard: int = 1 << 20) -> bool:
    """True iff ``f`` is zero at every point of F_{p^k}^n (exhaustive)."""
    return not eval_grid(f, ctx, guard).any()


__all__ += ["eval_grid", "fold_exponent", "vanishes_on_ext"]
