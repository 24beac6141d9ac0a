"""
Exhaustive enumeration of DWBC configurations

Brute-force oracle for small lattices. Vertex types follow the arrow
convention below, with h_left/h_right the horizontal arrows on the west and
east edges (R = pointing right, L = pointing left) and south/north the
vertical arrows below and above the vertex (U = up, D = down):

    type  west  east  south  north  weight
      1    R     R     U      U       a
      2    L     L     D      D       a
      3    R     R     D      D       b
      4    L     L     U      U       b
      5    R     L     D      U       c
      6    L     R     U      D       c

Domain wall boundary conditions: vertical arrows on the top and bottom
boundaries point into the square (D on top, U at the bottom), horizontal
arrows on the left and right boundaries point out (L on the left, R on the
right). Rows are filled top to bottom; each row is a depth-first walk from
west to east over the admissible vertex types.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Tuple

import mpmath
from mpmath import mpf

from sixvertex.core.bigreal import DEFAULT_PRECISION_BITS, check_precision
from sixvertex.core.errors import SizeError
from sixvertex.core.params import ModelParams
from sixvertex.core.route import PartitionRoute

logger = logging.getLogger(__name__)

MAX_SIZE = 6

# type -> (west, east, south, north)
VERTEX_TYPES: Dict[int, Tuple[str, str, str, str]] = {
    1: ("R", "R", "U", "U"),
    2: ("L", "L", "D", "D"),
    3: ("R", "R", "D", "D"),
    4: ("L", "L", "U", "U"),
    5: ("R", "L", "D", "U"),
    6: ("L", "R", "U", "D"),
}

# type -> index of its weight in (a, b, c)
WEIGHT_CLASS = {1: 0, 2: 0, 3: 1, 4: 1, 5: 2, 6: 2}

# (west, north) -> admissible types
_TRANSITIONS: Dict[Tuple[str, str], Tuple[int, ...]] = {}
for _type, (_west, _east, _south, _north) in VERTEX_TYPES.items():
    _TRANSITIONS.setdefault((_west, _north), ())
    _TRANSITIONS[(_west, _north)] += (_type,)


@dataclass(frozen=True)
class VertexConfig:
    """One DWBC configuration as an n x n matrix of vertex types."""

    n: int
    types: Tuple[Tuple[int, ...], ...]

    def render(self) -> str:
        """One line, rows separated by '/', e.g. ``26/61`` for n = 2."""
        return "/".join("".join(str(t) for t in row) for row in self.types)

    def census(self) -> Tuple[int, ...]:
        counts = Counter(t for row in self.types for t in row)
        return tuple(counts.get(t, 0) for t in range(1, 7))


def _check_size(n: int) -> None:
    if not 1 <= n <= MAX_SIZE:
        raise SizeError(f"Enumeration supports 1 <= n <= {MAX_SIZE}, got n={n}")


@lru_cache(maxsize=None)
def row_transitions(north: Tuple[str, ...]) -> Tuple[Tuple[Tuple[int, ...], Tuple[str, ...]], ...]:
    """All (row types, south edges) compatible with the north edges and the side boundaries."""
    results: List[Tuple[Tuple[int, ...], Tuple[str, ...]]] = []

    def walk(column: int, west: str, types: Tuple[int, ...], south: Tuple[str, ...]) -> None:
        if column == len(north):
            if west == "R":
                results.append((types, south))
            return
        for vertex in _TRANSITIONS.get((west, north[column]), ()):
            _, east, below, _ = VERTEX_TYPES[vertex]
            walk(column + 1, east, types + (vertex,), south + (below,))

    walk(0, "L", (), ())
    return tuple(results)


def enumerate_configs(n: int) -> Iterator[VertexConfig]:
    """Yield every DWBC configuration of the n x n lattice exactly once.

    Raises:
        SizeError: If n is outside 1..6.
    """
    _check_size(n)
    top = ("D",) * n
    bottom = ("U",) * n

    def rows(depth: int, north: Tuple[str, ...], acc: Tuple[Tuple[int, ...], ...]) -> Iterator[VertexConfig]:
        if depth == n:
            if north == bottom:
                yield VertexConfig(n, acc)
            return
        for types, south in row_transitions(north):
            yield from rows(depth + 1, south, acc + (types,))

    yield from rows(0, top, ())


def vertex_census(config: VertexConfig) -> Tuple[int, ...]:
    """Counts N_1..N_6 of the six vertex types."""
    return config.census()


@lru_cache(maxsize=None)
def weight_polynomial(n: int) -> Tuple[Tuple[Tuple[int, int, int], int], ...]:
    """Multiset of exponents (N_a, N_b, N_c) with multiplicities, sorted."""
    _check_size(n)
    terms: Counter = Counter()
    for config in enumerate_configs(n):
        census = config.census()
        terms[(census[0] + census[1], census[2] + census[3], census[4] + census[5])] += 1
    logger.debug(f"Enumerated n={n}: {sum(terms.values())} configurations, {len(terms)} distinct weights")
    return tuple(sorted(terms.items()))


def count_configs(n: int) -> int:
    return sum(multiplicity for _, multiplicity in weight_polynomial(n))


def partition_sum(weights: Tuple[Any, Any, Any], n: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """sum over configurations of a^{N_a} b^{N_b} c^{N_c} for explicit weights."""
    bits = check_precision(precision_bits)
    with mpmath.workprec(bits):
        a, b, c = (mpf(w) for w in weights)
        return mpmath.fsum(multiplicity * a**na * b**nb * c**nc for (na, nb, nc), multiplicity in weight_polynomial(n))


def brute_force_Z(params: ModelParams, n: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """Z_n as the direct sum over all DWBC configurations.

    Raises:
        SizeError: If n is outside 1..6.
    """
    _check_size(n)
    with mpmath.workprec(check_precision(precision_bits)):
        weights = params.big_weights()
        return partition_sum(weights, n, precision_bits)


class BruteForceRoute(PartitionRoute):
    """Exhaustive enumeration route, limited to n <= 6."""

    name = "brute"

    def supports(self, n: int) -> bool:
        return 1 <= n <= MAX_SIZE

    def log_partition(self, params: ModelParams, n: int, **options: Any) -> mpf:
        bits = options.get("precision_bits", DEFAULT_PRECISION_BITS)
        value = brute_force_Z(params, n, bits)
        with mpmath.workprec(bits):
            return mpmath.log(value)

    def describe(self) -> Dict[str, Any]:
        return {"name": self.name, "method": "exhaustive enumeration", "min_n": 1, "max_n": MAX_SIZE}


def dump_configs(n: int, limit: Optional[int] = None) -> List[str]:
    """Rendered configurations, in enumeration order."""
    lines = []
    for index, config in enumerate(enumerate_configs(n)):
        if limit is not None and index >= limit:
            break
        lines.append(config.render())
    return lines
