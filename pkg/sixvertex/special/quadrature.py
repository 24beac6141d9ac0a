"""
Adaptive Gauss-Legendre quadrature

Gauss-Legendre rules from ``numpy.polynomial.legendre.leggauss`` with node
doubling until two successive estimates agree, plus the square-root
endpoint substitution used for integrands of the form
regular(x) / sqrt((x - A)(B - x)).
"""

import logging
import math
from functools import lru_cache
from typing import Callable, Iterable, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from sixvertex.core.errors import QuadratureError

logger = logging.getLogger(__name__)

MIN_NODES = 16
MAX_NODES = 1024

Integrand = Callable[[np.ndarray], np.ndarray]


@lru_cache(maxsize=None)
def _rule(n: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def fixed_rule(f: Integrand, a: float, b: float, n: int) -> float:
    """n-point Gauss-Legendre estimate of the integral of f over [a, b]."""
    nodes, weights = _rule(n)
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    values = f(mid + half * nodes)
    return float(half * np.dot(weights, values))


def gauss_legendre(
    f: Integrand,
    a: float,
    b: float,
    tolerance: float = 1e-10,
    min_nodes: int = MIN_NODES,
    max_nodes: int = MAX_NODES,
) -> float:
    """Integrate a vectorized function over [a, b] with node doubling.

    Args:
        f: Integrand accepting and returning numpy arrays.
        a: Lower limit.
        b: Upper limit.
        tolerance: Accept when successive estimates differ by less than
            tolerance * max(1, |estimate|).
        min_nodes: Size of the first rule.
        max_nodes: Largest rule tried before giving up.

    Returns:
        float: The integral estimate.

    Raises:
        QuadratureError: If doubling is exhausted or the integrand yields NaN.
    """
    if a == b:
        return 0.0
    n = min_nodes
    previous = fixed_rule(f, a, b, n)
    while n < max_nodes:
        n *= 2
        current = fixed_rule(f, a, b, n)
        if math.isnan(current):
            raise QuadratureError(f"Integrand produced NaN on [{a}, {b}]")
        if abs(current - previous) <= tolerance * max(1.0, abs(current)):
            logger.debug(f"Quadrature on [{a:.6g}, {b:.6g}] converged with {n} nodes")
            return current
        previous = current
    raise QuadratureError(
        f"Gauss-Legendre did not converge on [{a}, {b}] with {max_nodes} nodes "
        f"(last change {abs(current - previous):.3e})"
    )


def integrate_between_roots(
    regular: Integrand,
    A: float,
    B: float,
    lo: float,
    hi: float,
    tolerance: float = 1e-10,
    breakpoints: Iterable[float] = (),
    max_nodes: int = MAX_NODES,
) -> float:
    """Integrate regular(x) / sqrt((x - A)(B - x)) over [lo, hi] within [A, B].

    The range is split at the midpoint of [A, B]. The left part uses
    x = A + (B - A) s^2, the right part x = B - (B - A) s^2, which removes
    the square-root singularities at A and B. Additional breakpoints (kinks
    of the regular part) split the range further.
    """
    if hi < lo:
        return -integrate_between_roots(regular, A, B, hi, lo, tolerance, breakpoints, max_nodes)
    if hi == lo:
        return 0.0
    width = B - A
    root_width = math.sqrt(width)
    mid = 0.5 * (A + B)
    cuts = sorted({lo, hi, *(p for p in (mid, *breakpoints) if lo < p < hi)})

    def left(s: np.ndarray) -> np.ndarray:
        x = A + width * s * s
        return regular(x) * 2.0 * root_width / np.sqrt(np.maximum(B - x, 0.0))

    def right(s: np.ndarray) -> np.ndarray:
        x = B - width * s * s
        return regular(x) * 2.0 * root_width / np.sqrt(np.maximum(x - A, 0.0))

    total = 0.0
    for p, q in zip(cuts[:-1], cuts[1:]):
        if q <= mid:
            s0 = math.sqrt(max(p - A, 0.0) / width)
            s1 = math.sqrt(max(q - A, 0.0) / width)
            total += gauss_legendre(left, s0, s1, tolerance, max_nodes=max_nodes)
        else:
            # s decreases as x increases on the right half
            s0 = math.sqrt(max(B - q, 0.0) / width)
            s1 = math.sqrt(max(B - p, 0.0) / width)
            total += gauss_legendre(right, s0, s1, tolerance, max_nodes=max_nodes)
    return total


def integrate_half_line(
    f: Callable[[np.ndarray], np.ndarray],
    z: float,
    direction: int = 1,
    tolerance: float = 1e-10,
    max_nodes: int = MAX_NODES,
    scale: float = 1.0,
) -> float:
    """Integrate f over [z, inf) (direction=1) or (-inf, z] (direction=-1).

    Uses z' = z +/- scale * u^2 / (1 - u^2) on u in [0, 1); f must decay at
    least like z'^{-2}. The u^2 removes an inverse square-root singularity
    at z. ``scale`` should be comparable to the distance over which f varies.
    """
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")

    def mapped(u: np.ndarray) -> np.ndarray:
        one_minus = 1.0 - u * u
        w = scale * u * u / one_minus
        return f(z + direction * w) * 2.0 * scale * u / (one_minus * one_minus)

    return gauss_legendre(mapped, 0.0, 1.0, tolerance, max_nodes=max_nodes)
