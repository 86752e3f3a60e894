"""Exact dense linear algebra over Z, Q and F_p for small matrices."""

from fractions import Fraction

from .errors import DomainError, ShapeError


def int_det(M):
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise ShapeError("matrix is not square")
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rational_inverse(M):
    """Inverse over Q as a matrix of Fractions; raises DomainError if singular."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise DomainError("matrix is singular")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def vec_mat(v, M):
    """Row vector times matrix."""
    return [sum(v[i] * M[i][j] for i in range(len(v))) for j in range(len(M[0]))]


def rank_mod_p(M, p):
    A = [[x % p for x in row] for row in M]
    rows, cols = len(A), len(A[0]) if A else 0
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, p)
        A[rank] = [x * inv % p for x in A[rank]]
        for r in range(rows):
            if r != rank and A[r][c]:
                f = A[r][c]
                A[r] = [(x - f * y) % p for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


def charpoly_int(M):
    """Characteristic polynomial det(xI - M), coefficients lowest degree first.

    Faddeev-LeVerrier; every division is exact for integer input.
    """
    n = len(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk = M * M_{k-1} + c_{n-k+1} I
        prod = [[sum(M[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = coeffs[n - k + 1]
        for i in range(n):
            prod[i][i] += c
        Mk = prod
        AM = [[sum(M[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(AM[i][i] for i in range(n))
        if tr % k:
            raise DomainError("non-integral characteristic polynomial")
        coeffs[n - k] = -tr // k
    return coeffs
