"""Small rational-integer helpers (trial division is plenty at these sizes)."""

from math import gcd, isqrt

from .errors import DomainError


def is_prime(m):
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    for q in range(3, isqrt(m) + 1, 2):
        if m % q == 0:
            return False
    return True


def factorint(m):
    """Return the prime factorization of ``m >= 1`` as a dict ``{q: e}``."""
    if m < 1:
        raise DomainError(f"cannot factor {m}")
    out = {}
    q = 2
    while q * q <= m:
        while m % q == 0:
            out[q] = out.get(q, 0) + 1
            m //= q
        q += 1 if q == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def divisors(m):
    divs = [1]
    for q, e in factorint(m).items():
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def moebius(m):
    """The Moebius function: 0 on non-squarefree ``m``, else ``(-1)**(#primes)``."""
    if m < 1:
        raise DomainError("moebius is defined for positive integers only")
    fac = factorint(m)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def vp(m, p):
    """Exact p-adic valuation of a nonzero integer."""
    if m == 0:
        raise DomainError("valuation of 0 is infinite")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def multiplicative_order(a, m):
    if gcd(a, m) != 1:
        raise DomainError(f"{a} is not a unit mod {m}")
    a %= m
    x, k = a, 1
    while x != 1 % m:
        x = x * a % m
        k += 1
    return k


def primitive_root(q):
    """Least primitive root modulo the prime ``q``."""
    if not is_prime(q):
        raise DomainError(f"{q} is not prime")
    if q == 2:
        return 1
    qs = list(factorint(q - 1))
    for g in range(2, q):
        if all(pow(g, (q - 1) // r, q) != 1 for r in qs):
            return g
    raise AssertionError("unreachable")


def next_prime(m):
    m += 1
    while not is_prime(m):
        m += 1
    return m
