"""Exception types shared across the package."""


class QuatLinkError(Exception):
    """Base class for all errors raised by quatlink."""


class MismatchError(QuatLinkError, TypeError):
    """Operands disagree in algebra signature or scalar backend."""


class MixedRadicalError(QuatLinkError, ArithmeticError):
    """Exact arithmetic would require combining two different square roots."""


class NonInvertibleError(QuatLinkError, ZeroDivisionError):
    """A quaternion with zero (or numerically zero) norm has no inverse."""


class NonGenericError(QuatLinkError):
    """The input violates a genericity assumption of the factorization theory."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnsupportedError(QuatLinkError):
    """The operation is outside the supported degree/shape range."""


class DegenerateError(QuatLinkError):
    """A geometric construction degenerates (coincident points, null mirror, ...)."""


class NullPointError(DegenerateError):
    """Quadrance requested for a null point, where it is undefined."""


class NonVectorialError(QuatLinkError, TypeError):
    """A projective-geometry operation received a quaternion with nonzero real part."""


class ParseError(QuatLinkError, ValueError):
    """Syntax error in a polynomial or point expression."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ExactnessWarning(UserWarning):
    """Emitted when an exact computation silently falls back to floating point."""
