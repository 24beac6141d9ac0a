"""
Error hierarchy for sixvertex

All failures raised by the library derive from SixVertexError. Domain
problems are also ValueErrors and numerical breakdowns are also
ArithmeticErrors, so callers that only know the builtin types still catch
them.
"""

from typing import Optional


class SixVertexError(Exception):
    """Base class for every error raised by the sixvertex package."""


class DomainError(SixVertexError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class PoleError(DomainError):
    """The argument sits on a pole of an identity's rational form."""


class DivergentSumError(DomainError):
    """The lattice moment sum diverges (|t| >= gamma)."""


class SizeError(DomainError):
    """Lattice size outside the range supported by exhaustive enumeration."""


class ConvergenceError(SixVertexError, ArithmeticError):
    """A series or iterative evaluation failed to converge."""


class QuadratureError(ConvergenceError):
    """Gauss-Legendre node doubling was exhausted or produced NaN."""


class PrecisionExhaustedError(SixVertexError, ArithmeticError):
    """The working precision was insufficient.

    Attributes:
        bits: The working precision (in bits) at which the failure occurred.
    """

    def __init__(self, message: str, bits: Optional[int] = None):
        super().__init__(message)
        self.bits = bits


class ToleranceError(SixVertexError):
    """A self-test check exceeded its tolerance.

    Attributes:
        check: Name of the failing check.
        value: The measured deviation.
        tolerance: The allowed deviation.
    """

    def __init__(self, check: str, value: float, tolerance: float):
        super().__init__(
            f"Check '{check}' failed: deviation {value:.3e} exceeds tolerance {tolerance:.3e}"
        )
        self.check = check
        self.value = value
        self.tolerance = tolerance
