"""Exception hierarchy shared across the package."""


class ZGenusError(Exception):
    """Base class for all errors raised by :mod:`zgenus`."""


class ZeroPolynomial(ZGenusError, ValueError):
    pass


class ZeroDenominator(ZGenusError, ZeroDivisionError):
    pass


class InexactDivision(ZGenusError, ArithmeticError):
    pass


class NonUnitDeterminant(ZGenusError, ValueError):
    pass


class OddSize(ZGenusError, ValueError):
    pass


class NotUnimodularIntersection(ZGenusError, ValueError):
    pass


class BadBlockPattern(ZGenusError, ValueError):
    pass


class SizeMismatch(ZGenusError, ValueError):
    pass


class BadClaspSign(ZGenusError, ValueError):
    pass


class EmptyLink(ZGenusError, ValueError):
    pass


class DegenerateTorsionBlock(ZGenusError, ValueError):
    pass


class SingularPresentation(ZGenusError, ValueError):
    pass


class SchemaError(ZGenusError, ValueError):
    """A link document does not follow the JSON schema."""


class MatrixShapeError(SchemaError):
    """A matrix in a link document has the wrong shape."""


class CorpusMismatch(ZGenusError, AssertionError):
    pass
