"""Exception types raised across the package."""


class CosetInvError(Exception):
    """Base class for all package errors."""


class ParseError(CosetInvError, ValueError):
    """Malformed theory, manifold or link text.

    ``position`` is the 0-based character offset of the offending token
    when it is known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class MalformedWeight(CosetInvError, ValueError):
    pass


class NonIntegralFusion(CosetInvError, ArithmeticError):
    pass


class DegenerateTheory(CosetInvError, ArithmeticError):
    pass


class InvalidExtension(CosetInvError, ValueError):
    pass


class InadmissibleColor(CosetInvError, ValueError):
    pass


class GcdViolation(CosetInvError, ValueError):
    pass


class UnknownColor(CosetInvError, KeyError):
    pass


class CapacityExceeded(CosetInvError, RuntimeError):
    """A computation would exceed one of the documented size caps."""


class UnsupportedCombination(CosetInvError, NotImplementedError):
    """The requested theory/presentation pair has no evaluation path."""
