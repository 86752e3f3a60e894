"""Orders of number fields given by an exact multiplication table.

An :class:`Order` stores structure constants ``table[i][j][k]``: the
coordinate of xi_k in the product xi_i * xi_j. The first basis element is
always 1. Everything downstream (ideals, index forms, criteria) works on
this representation, whether the order came from a power-basis field file
or from exact Gaussian-period arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InternalInconsistency, NotAnOrder, NotUnital, ShapeError, Singular
from .linalg import charpoly_int, int_det, rational_inverse, vec_mat
from .multipoly import MPoly, charpoly_matrix, disc_in_w, mp_content, mp_det

__all__ = [
    "Order",
    "OrderElement",
    "charpoly_element",
    "element_index",
    "elt_mul",
    "elt_pow",
    "fundamental_charpoly",
    "index_form",
    "mult_matrix",
    "order_from_power_basis",
    "order_from_structure",
    "trace",
]


class Order:
    """A degree-n order with basis xi_1 = 1, xi_2, ..., xi_n."""

    def __init__(self, table, label: str = "", check: bool = True):
        self.n = n = len(table)
        self.table = tuple(tuple(tuple(int(x) for x in v) for v in row) for row in table)
        self.label = label
        if check:
            self._validate()
        self._mult = [self._basis_mult_matrix(i) for i in range(n)]
        self.disc = int_det(
            [[self._trace_vec(self.table[i][j]) for j in range(n)] for i in range(n)]
        )
        if check and self.disc == 0:
            raise Singular("trace form is degenerate (discriminant 0)")
        self._index_form = None
        self._charpoly = None

    def _validate(self):
        n, T = self.n, self.table
        if n < 1 or any(len(row) != n or any(len(v) != n for v in row) for row in T):
            raise ShapeError("multiplication table must be n x n x n")
        for j in range(n):
            unit = tuple(int(k == j) for k in range(n))
            if T[0][j] != unit or T[j][0] != unit:
                raise NotUnital("first basis element is not the identity")
        for i in range(n):
            for j in range(i + 1, n):
                if T[i][j] != T[j][i]:
                    raise NotAnOrder(f"table is not commutative at ({i}, {j})")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self._mul_vec(T[i][j], _unit(k, n))
                    right = self._mul_vec(_unit(i, n), T[j][k])
                    if left != right:
                        raise NotAnOrder(f"table is not associative at ({i}, {j}, {k})")

    def _mul_vec(self, a, b):
        n, T = self.n, self.table
        out = [0] * n
        for i, ai in enumerate(a):
            if not ai:
                continue
            Ti = T[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = ai * bj
                for k, t in enumerate(Ti[j]):
                    if t:
                        out[k] += c * t
        return tuple(out)

    def _basis_mult_matrix(self, i):
        # column j = coordinates of xi_i * xi_j
        n = self.n
        return tuple(tuple(self.table[i][j][k] for j in range(n)) for k in range(n))

    def _trace_vec(self, v):
        return sum(v[i] * self._mult[i][k][k] for i in range(self.n) for k in range(self.n) if v[i])

    def element(self, coords: Sequence[int]) -> "OrderElement":
        return OrderElement(self, coords)

    def basis(self, i: int) -> "OrderElement":
        """The basis element xi_{i+1} (0-based ``i``)."""
        return OrderElement(self, _unit(i, self.n))

    @property
    def one(self):
        return self.basis(0)

    def __repr__(self):
        return f"Order(n={self.n}, disc={self.disc}, label={self.label!r})"

    def __eq__(self, other):
        return isinstance(other, Order) and self.table == other.table

    def __hash__(self):
        return hash(self.table)


def _unit(i, n):
    return tuple(int(k == i) for k in range(n))


class OrderElement:
    __slots__ = ("order", "coords")

    def __init__(self, order: Order, coords: Sequence[int]):
        if len(coords) != order.n:
            raise ShapeError(f"expected {order.n} coordinates, got {len(coords)}")
        self.order = order
        self.coords = tuple(int(c) for c in coords)

    def _check(self, other):
        if isinstance(other, int):
            return OrderElement(self.order, (other,) + (0,) * (self.order.n - 1))
        if not isinstance(other, OrderElement) or other.order is not self.order and other.order != self.order:
            raise ShapeError("elements belong to different orders")
        return other

    def __add__(self, other):
        other = self._check(other)
        return OrderElement(self.order, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return OrderElement(self.order, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return OrderElement(self.order, [a * other for a in self.coords])
        return elt_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        return elt_pow(self, e)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._check(other)
        return isinstance(other, OrderElement) and self.order == other.order and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def reduce_mod(self, m: int) -> "OrderElement":
        return OrderElement(self.order, [a % m for a in self.coords])

    def __repr__(self):
        return f"OrderElement{self.coords}"


def elt_mul(a: OrderElement, b: OrderElement) -> OrderElement:
    b = a._check(b)
    return OrderElement(a.order, a.order._mul_vec(a.coords, b.coords))


def elt_pow(a: OrderElement, e: int, modulus: int | None = None) -> OrderElement:
    """``a**e`` by repeated squaring, optionally reducing coordinates mod ``modulus``."""
    if e < 0:
        raise ValueError("negative exponent")
    O = a.order
    result = O.one.coords
    base = a.coords
    if modulus is not None:
        base = tuple(x % modulus for x in base)
    while e:
        if e & 1:
            result = O._mul_vec(result, base)
            if modulus is not None:
                result = tuple(x % modulus for x in result)
        e >>= 1
        if e:
            base = O._mul_vec(base, base)
            if modulus is not None:
                base = tuple(x % modulus for x in base)
    return OrderElement(O, result)


def mult_matrix(a: OrderElement):
    """Matrix of multiplication by ``a``; column j holds the coordinates of a*xi_j."""
    O = a.order
    n = O.n
    M = [[0] * n for _ in range(n)]
    for i, ai in enumerate(a.coords):
        if ai:
            Mi = O._mult[i]
            for r in range(n):
                for c in range(n):
                    M[r][c] += ai * Mi[r][c]
    return M


def trace(a: OrderElement) -> int:
    M = mult_matrix(a)
    return sum(M[i][i] for i in range(len(M)))


def charpoly_element(a: OrderElement) -> list[int]:
    """Monic integer characteristic polynomial, lowest degree first."""
    return charpoly_int(mult_matrix(a))


def power_rows(a: OrderElement):
    """Coordinates of 1, a, ..., a^{n-1}."""
    n = a.order.n
    rows = []
    x = a.order.one
    for _ in range(n):
        rows.append(list(x.coords))
        x = x * a
    return rows


def element_index(a: OrderElement) -> int:
    return abs(int_det(power_rows(a)))


def order_from_structure(constants, new_basis, label="") -> Order:
    """Change basis of a commutative algebra and return the resulting order.

    ``constants[i][j]`` gives xi'_i * xi'_j in some source basis (rationals
    allowed); rows of ``new_basis`` are the coordinates of the new basis
    elements in that source basis. The new table must be integral.
    """
    n = len(new_basis)
    B = [[Fraction(x) for x in row] for row in new_basis]
    try:
        Binv = rational_inverse(B)
    except ValueError as exc:
        raise Singular("basis matrix is not invertible") from exc

    def src_mul(x, y):
        out = [Fraction(0)] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, t in enumerate(constants[i][j]):
                    if t:
                        out[k] += c * t
        return out

    table = []
    for i in range(n):
        row = []
        for j in range(n):
            coords = vec_mat(src_mul(B[i], B[j]), Binv)
            if any(c.denominator != 1 for c in coords):
                raise NotAnOrder(
                    f"product of basis elements {i + 1} and {j + 1} has non-integral coordinates"
                )
            row.append([int(c) for c in coords])
        table.append(row)
    return Order(table, label)


def power_basis_constants(min_poly: Sequence[int]):
    """Structure constants of Q[x]/(min_poly) in the power basis."""
    n = len(min_poly) - 1
    # reduce x^k for k < 2n - 1
    powers = []
    for k in range(2 * n - 1):
        if k < n:
            powers.append([int(i == k) for i in range(n)])
        else:
            prev = powers[k - 1]
            top = prev[n - 1]
            nxt = [0] + prev[: n - 1]
            nxt = [c - top * min_poly[i] for i, c in enumerate(nxt)]
            powers.append(nxt)
    return [[powers[i + j] for j in range(n)] for i in range(n)]


def order_from_power_basis(min_poly: Sequence[int], basis_numerators, denom: int, label: str = "") -> Order:
    """Order spanned by the rows of ``basis_numerators / denom`` in the power basis.

    ``min_poly`` is given lowest degree first and must be monic.
    """
    n = len(min_poly) - 1
    if n < 1 or min_poly[-1] != 1:
        raise NotAnOrder("minimal polynomial must be monic of degree >= 1")
    if denom <= 0:
        raise NotAnOrder("denominator must be positive")
    if len(basis_numerators) != n or any(len(r) != n for r in basis_numerators):
        raise ShapeError("basis matrix must be n x n")
    B = [[Fraction(x, denom) for x in row] for row in basis_numerators]
    if B[0] != [Fraction(int(i == 0)) for i in range(n)]:
        raise NotUnital("first basis element must be 1")
    return order_from_structure(power_basis_constants(min_poly), B, label)


def _generic_products(O: Order):
    n = O.n
    u = [MPoly.var(i, n) for i in range(n)]
    zero = MPoly.zero(n)
    T = O.table

    def mul(x, y):
        out = [zero] * n
        for i in range(n):
            if x[i].is_zero():
                continue
            for j in range(n):
                if y[j].is_zero():
                    continue
                prod = x[i] * y[j]
                for k, t in enumerate(T[i][j]):
                    if t:
                        out[k] = out[k] + prod * t
        return out

    return u, mul


def fundamental_charpoly(O: Order) -> MPoly:
    """Characteristic polynomial of w0 = sum u_i xi_i; w is variable 0."""
    if O._charpoly is None:
        n = O.n
        u = [MPoly.var(i, n) for i in range(n)]
        M = [[MPoly.zero(n) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            Mi = O._mult[i]
            for r in range(n):
                for c in range(n):
                    if Mi[r][c]:
                        M[r][c] = M[r][c] + u[i] * Mi[r][c]
        O._charpoly = charpoly_matrix(M)
    return O._charpoly


def index_form(O: Order, check: bool = True) -> MPoly:
    """The primitive index form: det of the coordinates of 1, w0, ..., w0^{n-1}.

    Sign is fixed so that the lexicographically leading coefficient is
    positive. With ``check`` the content and the discriminant identity
    disc_w(charpoly) = index_form^2 * disc are verified.
    """
    if O._index_form is not None:
        return O._index_form
    n = O.n
    u, mul = _generic_products(O)
    one = [MPoly.const(int(i == 0), n) for i in range(n)]
    rows = [one]
    for _ in range(n - 1):
        rows.append(mul(rows[-1], u))
    delta = mp_det(rows, n)
    if delta.is_zero():
        raise InternalInconsistency("index form vanishes identically")
    if delta.leading_term()[1] < 0:
        delta = -delta
    if check:
        if mp_content(delta) != 1:
            raise InternalInconsistency(f"index form has content {mp_content(delta)}")
        if n >= 2 and disc_in_w(fundamental_charpoly(O)) != delta * delta * O.disc:
            raise InternalInconsistency("discriminant identity D = index_form^2 * d_K fails")
    O._index_form = delta
    return delta
