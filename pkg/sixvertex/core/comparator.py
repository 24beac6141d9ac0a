"""
Route Comparison Core

This module provides the comparator class that evaluates the partition
function along two routes and reports their agreement.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Type

import mpmath

from sixvertex.core.bigreal import DEFAULT_PRECISION_BITS, GUARD_BITS
from sixvertex.core.params import ModelParams
from sixvertex.core.route import PartitionRoute

logger = logging.getLogger(__name__)


@dataclass
class ComparisonReport:
    """Per-n log values of two routes and their differences."""

    reference: str
    candidate: str
    rows: List[Dict[str, Any]] = field(default_factory=list)
    skipped: List[int] = field(default_factory=list)

    @property
    def max_log_difference(self) -> float:
        if not self.rows:
            return 0.0
        return max(float(row["log_difference"]) for row in self.rows)


class RouteComparator:
    """Main class for comparing two partition function routes."""

    def __init__(self, routes_registry: Dict[str, Type[PartitionRoute]], reference_type: str, candidate_type: str):
        """
        Initialize the comparator with reference and candidate route types.

        Args:
            routes_registry: Dictionary mapping route names to route classes
            reference_type: The route treated as ground truth (e.g., "exact")
            candidate_type: The route under test (e.g., "brute", "asym")

        Raises:
            ValueError: If an unsupported route type is provided
        """
        if reference_type not in routes_registry:
            raise ValueError(f"Unsupported reference route: {reference_type}")
        if candidate_type not in routes_registry:
            raise ValueError(f"Unsupported candidate route: {candidate_type}")

        self.reference_route = routes_registry[reference_type]()
        self.candidate_route = routes_registry[candidate_type]()
        self.reference_type = reference_type
        self.candidate_type = candidate_type

    def compare(
        self,
        params: ModelParams,
        n_values: Iterable[int],
        reference_options: Optional[Dict[str, Any]] = None,
        candidate_options: Optional[Dict[str, Any]] = None,
    ) -> ComparisonReport:
        """
        Evaluate ln Z_n along both routes for each n.

        Args:
            params: Model parameters
            n_values: Lattice sizes to compare
            reference_options: Keyword options for the reference route
            candidate_options: Keyword options for the candidate route

        Returns:
            ComparisonReport: One row per n supported by both routes; the
            remaining sizes are listed as skipped
        """
        reference_options = reference_options or {}
        candidate_options = candidate_options or {}
        report = ComparisonReport(self.reference_type, self.candidate_type)
        bits = GUARD_BITS + max(
            reference_options.get("precision_bits", DEFAULT_PRECISION_BITS),
            candidate_options.get("precision_bits", DEFAULT_PRECISION_BITS),
        )
        logger.info(f"Comparing {self.candidate_type} against {self.reference_type} at gamma={params.gamma}, t={params.t}")

        for n in n_values:
            if not (self.reference_route.supports(n) and self.candidate_route.supports(n)):
                logger.warning(f"Skipping n={n}: not supported by both routes")
                report.skipped.append(n)
                continue

            reference_log = self.reference_route.log_partition(params, n, **reference_options)
            candidate_log = self.candidate_route.log_partition(params, n, **candidate_options)
            with mpmath.workprec(bits):
                # ln(Z_c / Z_r); its magnitude is the relative deviation to first order
                difference = abs(mpmath.expm1(candidate_log - reference_log))
            report.rows.append(
                {
                    "n": n,
                    "reference_log": reference_log,
                    "candidate_log": candidate_log,
                    "log_difference": difference,
                }
            )
            logger.debug(f"n={n}: relative deviation {mpmath.nstr(difference, 5)}")

        logger.info(
            f"Comparison of {self.candidate_type} against {self.reference_type} finished: "
            f"{len(report.rows)} sizes, max relative deviation {report.max_log_difference:.3e}"
        )
        return report
