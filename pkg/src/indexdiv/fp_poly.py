"""Dense polynomials over a prime field F_p and the finite fields F_{p^k}.

Polynomials are immutable value objects with coefficients stored lowest
degree first. Factorization is plain trial division against the enumerated
monic irreducibles, which is deterministic and fast enough for p <= 7 and
degrees up to about 20.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .arith import divisors, factorint, is_prime, moebius
from .errors import CapacityError, DomainError

__all__ = [
    "ENUMERATION_GUARD",
    "ExtFieldCtx",
    "FpPolynomial",
    "count_irreducible",
    "enumerate_irreducibles",
    "ext_elements",
    "factor",
    "is_irreducible",
    "moebius",
]

ENUMERATION_GUARD = 10**6


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class FpPolynomial:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2:
            raise DomainError(f"modulus must be >= 2, got {self.p}")
        object.__setattr__(self, "coeffs", _trim(c % self.p for c in self.coeffs))

    @classmethod
    def from_ints(cls, p: int, coeffs: Sequence[int]) -> "FpPolynomial":
        return cls(p, tuple(coeffs))

    @classmethod
    def monomial(cls, p, degree, coeff=1):
        return cls(p, (0,) * degree + (coeff,))

    @classmethod
    def x(cls, p):
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.lead == 1

    def _same(self, other):
        if isinstance(other, int):
            return FpPolynomial(self.p, (other,))
        if not isinstance(other, FpPolynomial) or other.p != self.p:
            raise DomainError("polynomials over different prime fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return FpPolynomial(
            self.p,
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)),
        )

    __radd__ = __add__

    def __neg__(self):
        return FpPolynomial(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        other = self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPolynomial(self.p, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return FpPolynomial(self.p, tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        inv = pow(other.lead, -1, p)
        rem = list(self.coeffs)
        db = other.degree
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] * inv % p
            if c:
                quot[i - db] = c
                for j, bj in enumerate(other.coeffs):
                    rem[i - db + j] = (rem[i - db + j] - c * bj) % p
        return FpPolynomial(p, tuple(quot)), FpPolynomial(p, tuple(rem[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise DomainError("negative exponent")
        result = FpPolynomial(self.p, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e: int, modulus: "FpPolynomial") -> "FpPolynomial":
        result = FpPolynomial(self.p, (1,)) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result

    def monic(self):
        if self.is_zero():
            return self
        inv = pow(self.lead, -1, self.p)
        return FpPolynomial(self.p, tuple(c * inv for c in self.coeffs))

    def gcd(self, other):
        a, b = self, self._same(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        return FpPolynomial(self.p, tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __str__(self):
        return format_poly(self.coeffs, "x")

    def __repr__(self):
        return f"FpPolynomial(p={self.p}, {self})"


def format_poly(coeffs, var="x"):
    """Render a coefficient list (lowest degree first) as ``x^2 + x + 1``."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _check_prime(p):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def count_irreducible(p: int, kappa: int) -> int:
    """Number of monic irreducible polynomials of degree ``kappa`` over F_p."""
    _check_prime(p)
    if kappa < 1:
        raise DomainError("degree must be >= 1")
    total = sum(moebius(kappa // d) * p**d for d in divisors(kappa))
    assert total % kappa == 0
    return total // kappa


def is_irreducible(f: FpPolynomial) -> bool:
    """Rabin's test: f | x^{p^k} - x and gcd(f, x^{p^{k/q}} - x) = 1 for primes q | k."""
    if f.degree < 1:
        raise DomainError("irreducibility is only defined for degree >= 1")
    k, p = f.degree, f.p
    x = FpPolynomial.x(p)
    if not ((x.powmod(p**k, f) - x) % f).is_zero():
        return False
    for q in factorint(k):
        h = x.powmod(p ** (k // q), f) - x
        if f.gcd(h).degree != 0:
            return False
    return True


def _monic_of_degree(p, kappa):
    # base-p counting order on (c_{k-1}, ..., c_0): x, x+1, ... then x^2, x^2+1, ...
    for tail in itertools.product(range(p), repeat=kappa):
        yield FpPolynomial(p, tuple(reversed(tail)) + (1,))


def enumerate_irreducibles(p: int, kappa: int) -> list[FpPolynomial]:
    """All monic irreducibles of degree ``kappa`` over F_p, in lexicographic order."""
    _check_prime(p)
    if kappa < 1:
        raise DomainError("degree must be >= 1")
    if p**kappa > ENUMERATION_GUARD:
        raise CapacityError(f"{p}^{kappa} candidates exceed the enumeration guard")
    if kappa == 1:
        return list(_monic_of_degree(p, 1))
    return [f for f in _monic_of_degree(p, kappa) if f.coeffs[0] != 0 and is_irreducible(f)]


def factor(f: FpPolynomial) -> list[tuple[FpPolynomial, int]]:
    """Factor ``f`` into monic irreducibles with multiplicities (unit dropped)."""
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    rest = f.monic()
    out = []
    d = 1
    while 2 * d <= rest.degree:
        for g in enumerate_irreducibles(f.p, d):
            e = 0
            while True:
                q, r = divmod(rest, g)
                if not r.is_zero():
                    break
                rest, e = q, e + 1
            if e:
                out.append((g, e))
        d += 1
    if rest.degree >= 1:
        out.append((rest, 1))
    return out


class ExtFieldCtx:
    """The field F_{p^k} = F_p[t]/(modulus).

    Elements are :class:`FpPolynomial` of degree < k. For speed they can also be
    handled as integers ``sum c_i p^i``; :meth:`encode` and :meth:`decode`
    convert, and :meth:`mul_table_logs` gives discrete-log tables.
    """

    def __init__(self, p: int, k: int, modulus: FpPolynomial | None = None):
        _check_prime(p)
        if k < 1:
            raise DomainError("extension degree must be >= 1")
        if modulus is None:
            modulus = first_irreducible(p, k)
        if modulus.p != p or modulus.degree != k or not modulus.is_monic():
            raise DomainError("modulus must be monic of degree k over F_p")
        if not is_irreducible(modulus):
            raise DomainError(f"{modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p**k
        self._logs = None

    def __repr__(self):
        return f"ExtFieldCtx(p={self.p}, k={self.k}, modulus={self.modulus})"

    def element(self, value) -> FpPolynomial:
        if isinstance(value, FpPolynomial):
            return value % self.modulus
        if isinstance(value, int):
            return FpPolynomial(self.p, (value,))
        return FpPolynomial(self.p, tuple(value)) % self.modulus

    @property
    def zero(self):
        return FpPolynomial(self.p, ())

    @property
    def one(self):
        return FpPolynomial(self.p, (1,))

    @property
    def gen(self):
        """The class of t, a root of the modulus."""
        return FpPolynomial.x(self.p) % self.modulus

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b % self.modulus

    def pow(self, a, e):
        return a.powmod(e, self.modulus)

    def encode(self, a: FpPolynomial) -> int:
        return sum(c * self.p**i for i, c in enumerate(a.coeffs))

    def decode(self, code: int) -> FpPolynomial:
        digits = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            digits.append(r)
        return FpPolynomial(self.p, tuple(digits))

    def elements(self) -> Iterator[FpPolynomial]:
        return ext_elements(self)

    def log_tables(self):
        """``(log, exp)`` arrays over integer codes for some generator of F_q^*.

        ``log[0]`` is unused; ``exp`` has length q - 1.
        """
        if self._logs is None:
            q = self.order
            if q > ENUMERATION_GUARD:
                raise CapacityError(f"field of size {q} exceeds the enumeration guard")
            for cand in range(1, q):
                g = self.decode(cand)
                exp = [0] * (q - 1)
                x = self.one
                seen = set()
                ok = True
                for i in range(q - 1):
                    c = self.encode(x)
                    if c in seen:
                        ok = False
                        break
                    seen.add(c)
                    exp[i] = c
                    x = self.mul(x, g)
                if ok:
                    log = [0] * q
                    for i, c in enumerate(exp):
                        log[c] = i
                    self._logs = (log, exp)
                    break
        return self._logs


def first_irreducible(p, k):
    """The lexicographically first monic irreducible of degree ``k``."""
    for f in _monic_of_degree(p, k):
        if k == 1 or (f.coeffs[0] != 0 and is_irreducible(f)):
            return f
    raise AssertionError("irreducibles exist in every degree")


def ext_elements(ctx: ExtFieldCtx) -> Iterator[FpPolynomial]:
    """Yield all p^k elements of F_{p^k}, ordered by integer code."""
    if ctx.order > ENUMERATION_GUARD:
        raise CapacityError(f"field of size {ctx.order} exceeds the enumeration guard")
    for code in range(ctx.order):
        yield ctx.decode(code)
