"""Exception types raised by divquat."""


class DivquatError(Exception):
    """Base class for all divquat errors."""


class DivisorZero(DivquatError, ZeroDivisionError):
    """The divisor quaternion has zero squared norm."""


class NonFiniteInput(DivquatError, ValueError):
    """A binary64 component is NaN or infinite."""


class ParseError(DivquatError, ValueError):
    """Text could not be parsed as a scalar."""


class ZeroDenominator(ParseError):
    """A fraction literal has a zero denominator."""


class DimensionMismatch(DivquatError, ValueError):
    pass


class UnknownMatrixName(DivquatError, KeyError):
    pass


class ContractViolation(DivquatError, AssertionError):
    """Measured operation counts differ from the expected contract."""
