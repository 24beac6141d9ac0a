"""
Partition Function Routes

This module provides the abstract interface shared by the independent ways
of computing the DWBC partition function Z_n.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict

from mpmath import mpf

from sixvertex.core.params import ModelParams


class PartitionRoute(ABC):
    """Abstract base class for partition function routes."""

    name: str = ""

    @abstractmethod
    def supports(self, n: int) -> bool:
        """Check whether the route can produce Z_n for this lattice size.

        Args:
            n: Lattice size.

        Returns:
            bool: True if the size is within reach of the route.
        """
        pass

    @abstractmethod
    def log_partition(self, params: ModelParams, n: int, **options: Any) -> mpf:
        """Compute ln Z_n.

        Args:
            params: Model parameters.
            n: Lattice size.
            **options: Route specific options (precision, fitted constants).

        Returns:
            mpf: The natural logarithm of the partition function.
        """
        pass

    @abstractmethod
    def describe(self) -> Dict[str, Any]:
        """Get information about the route, including its size limits.

        Returns:
            Dict[str, Any]: Route description.
        """
        pass
