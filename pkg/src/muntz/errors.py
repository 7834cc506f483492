"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`MuntzError`,
so callers (the CLI in particular) can separate input problems from
numerical ones.
"""


class MuntzError(Exception):
    """Base class for all package errors."""


class InputError(MuntzError, ValueError):
    """Raised when an argument violates a documented precondition."""


class NumericalError(MuntzError, ArithmeticError):
    """Raised when a computation cannot meet its accuracy contract."""


class HalfPlaneViolation(InputError):
    """An exponent lies on or left of the line Re = -1/2."""

    def __init__(self, index, value=None):
        self.index = index
        self.value = value
        super().__init__(f"point {index} ({value!r}) violates Re > -1/2")


class DuplicatePoint(InputError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"points {i} and {j} coincide")


class BadGeneratorParams(InputError):
    pass


class DomainViolation(InputError):
    """A point that must lie in the open right half-plane does not."""


class IndexOutOfRange(InputError, IndexError):
    pass


class LengthMismatch(InputError):
    pass


class NotRealIncreasing(InputError):
    pass


class RatioAtMostOne(InputError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"r_{n} <= 1: the AOB constant is undefined")


class NotRealAtLeastHalf(InputError):
    pass


class BadBase(InputError):
    pass


class DegenerateInput(InputError):
    """A zero vector or zero-norm combination where a nonzero one is needed."""


class DegenerateRHS(DegenerateInput):
    pass


class ParseError(InputError):
    def __init__(self, message, pointer=""):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")


class TailBoundFailure(InputError):
    """Declared growth bound leaves the transform integral divergent."""


class IllConditioned(NumericalError):
    def __init__(self, cond_estimate):
        self.cond_estimate = cond_estimate
        super().__init__(f"Gram matrix too ill-conditioned (cond ~ {cond_estimate:.3e})")


class ConvergenceFailure(NumericalError):
    pass


class ToleranceNotMet(NumericalError):
    pass


class RouteMismatch(NumericalError):
    """Two independent evaluation routes disagree beyond tolerance."""
