"""Exception hierarchy shared by every module."""


class ZetaRatioError(Exception):
    """Base class for all errors raised by :mod:`zetaratio`."""


class UsageError(ZetaRatioError, ValueError):
    """A caller violated an argument contract (bad cutoff, short grid, ...)."""


class DomainError(ZetaRatioError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at the pole s = 1 of zeta."""


class AccuracyError(ZetaRatioError, ArithmeticError):
    """The requested accuracy could not be reached.

    Attributes:
        estimate: the error estimate that exceeded the target.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class ResourceError(ZetaRatioError, MemoryError):
    """A table could not be allocated at the requested size."""
