"""Exception hierarchy shared by every layer of the package."""


class IndexDivError(Exception):
    """Base class for all errors raised by :mod:`indexdiv`."""


class DomainError(IndexDivError, ValueError):
    pass


class CapacityError(IndexDivError):
    """An exhaustive enumeration would exceed its size guard."""


class ShapeError(IndexDivError, ValueError):
    pass


class NotPrime(DomainError):
    pass


class NotDivisor(DomainError):
    pass


# Invalid field data. The CLI maps all of these to exit code 2.
class InvalidFieldData(IndexDivError):
    pass


class NotAnOrder(InvalidFieldData):
    """Structure constants are not integral, or the table is not an order."""


class NotUnital(InvalidFieldData):
    pass


class Singular(InvalidFieldData):
    pass


class FieldFileError(InvalidFieldData):
    pass


class RankDeficient(IndexDivError):
    pass


class NonIntegralLambda(IndexDivError):
    """A Moebius-combined valuation was negative or not divisible by its degree."""


class IndexNotCoprime(IndexDivError):
    pass


class ClosureViolation(IndexDivError):
    pass


class NoRepresentation(IndexDivError):
    pass


class InternalInconsistency(IndexDivError):
    """Two independent computations that must agree did not."""
