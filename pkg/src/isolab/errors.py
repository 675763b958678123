"""Error signals shared across the library.

Every raisable condition has its own class so callers (and the CLI exit-code
map) can branch on the type rather than parse messages.
"""


class IsolabError(Exception):
    """Base class for all library errors."""


class NonPrime(IsolabError):
    """The requested characteristic is not a prime number."""


class DivideByZero(IsolabError, ZeroDivisionError):
    """Inversion of the zero element."""


class DegreeTooSmall(IsolabError):
    """The coefficient field is too small for the requested construction."""


class InsufficientPrecision(IsolabError):
    """A quantity could not be certified at the working precision.

    ``hint`` suggests a precision at which a retry may succeed.
    """

    def __init__(self, message: str, hint: int | None = None):
        super().__init__(message)
        self.hint = hint


class ZeroValuation(IsolabError):
    """Valuation was requested for an exact zero."""


class LengthMismatch(IsolabError):
    """Two slope vectors of different lengths were combined."""


class SumMismatch(IsolabError):
    """Two slope vectors with different totals were combined."""


class NotANewtonPoint(IsolabError):
    """A slope's denominator does not divide its multiplicity."""


class NotInvertible(IsolabError):
    """Matrix with certified zero determinant where a unit was required."""


class Unrealizable(IsolabError):
    """No witness matrix with the requested invariants could be found."""


class SamplingExhausted(IsolabError):
    """A rejection sampler ran out of budget before accepting anything."""


class BadHodgeProfile(IsolabError):
    """A tuple component does not have the Hodge point the operation needs."""


class InvalidParams(IsolabError):
    """Structurally invalid parameters."""


class RangeError(IsolabError):
    """A numeric argument is outside its documented range."""
