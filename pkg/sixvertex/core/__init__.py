"""
Core functionality for sixvertex

This module provides the model parameters, the error hierarchy and the
route abstractions shared by the rest of the package.
"""

from sixvertex.core.comparator import ComparisonReport, RouteComparator
from sixvertex.core.errors import (
    ConvergenceError,
    DivergentSumError,
    DomainError,
    PoleError,
    PrecisionExhaustedError,
    QuadratureError,
    SixVertexError,
    SizeError,
    ToleranceError,
)
from sixvertex.core.params import ModelParams
from sixvertex.core.route import PartitionRoute

__all__ = [
    "ModelParams",
    "PartitionRoute",
    "RouteComparator",
    "ComparisonReport",
    "SixVertexError",
    "DomainError",
    "PoleError",
    "DivergentSumError",
    "SizeError",
    "ConvergenceError",
    "QuadratureError",
    "PrecisionExhaustedError",
    "ToleranceError",
]
