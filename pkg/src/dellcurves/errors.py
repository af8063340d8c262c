"""Exception hierarchy shared by every module of the package."""


class DellError(Exception):
    """Base class for all errors raised by dellcurves."""


class NotPrime(DellError, ValueError):
    pass


class TooLarge(DellError, ValueError):
    pass


class ZeroElement(DellError, ValueError):
    pass


class DivisionByZero(DellError, ZeroDivisionError):
    pass


class FieldMismatch(DellError, TypeError):
    pass


class ConstantInput(DellError, ValueError):
    pass


class OddDegree(DellError, ValueError):
    pass


class EvenCharacteristic(DellError, ValueError):
    pass


class NotMonic(DellError, ValueError):
    pass


class ZeroInput(DellError, ValueError):
    pass


class ZeroDenominator(DellError, ZeroDivisionError):
    pass


class SquareInput(DellError, ValueError):
    pass


class NotQuadratic(DellError, ValueError):
    pass


class UnsupportedArtinSchreier(DellError, NotImplementedError):
    pass


class NonIntegral(DellError, ArithmeticError):
    pass


class PlaceNotInR(DellError, ValueError):
    pass


class BadPlace(DellError, ValueError):
    pass


class AlgebraMismatch(DellError, TypeError):
    pass


class NonPolynomialCoords(DellError, ValueError):
    pass


class OddRViolated(DellError, ValueError):
    pass


class EqualRoots(DellError, ValueError):
    pass


class NotTorsion(DellError, ValueError):
    pass


class InsufficientPrecision(DellError, ArithmeticError):
    """Raised when a Laurent computation cannot decide a valuation."""


class ScopeViolation(DellError, ValueError):
    """The request lies outside the cases the theory covers."""


class ParseError(DellError, ValueError):
    def __init__(self, message, token=None, position=None, expected=None):
        super().__init__(message)
        self.token = token
        self.position = position
        self.expected = expected


class ValidationError(DellError, ValueError):
    pass
