"""Exception types shared across the workbench."""


class ExzeroError(Exception):
    """Base class for all workbench errors."""


class DomainError(ExzeroError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class OutOfRangeError(ExzeroError, ValueError):
    """A query exceeds the range covered by a precomputed table."""


class ResourceLimitError(ExzeroError, RuntimeError):
    """A request would exceed the configured memory/size budget."""


class UnsupportedModulusError(ExzeroError, ValueError):
    """The modulus is outside the supported set (odd square-free, or 4 / 8)."""


class VerificationError(ExzeroError, ArithmeticError):
    """An internal exact identity failed its tolerance check.

    Raised when a quantity that is mathematically forced (e.g. the moment
    identity or a Gauss-sum magnitude) does not hold at working precision,
    which indicates a bug rather than bad input.
    """
