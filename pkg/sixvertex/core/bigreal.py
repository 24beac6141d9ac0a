"""
Arbitrary precision helpers

Thin layer over mpmath that fixes how the package handles BigReal values:
every exact computation runs inside an explicit ``mpmath.workprec`` block,
and values leave the package either as mpf or as decimal strings.
"""

import mpmath
from mpmath import mpf

from sixvertex.core.errors import DomainError

MIN_PRECISION_BITS = 64
GUARD_BITS = 32
DEFAULT_PRECISION_BITS = 256


def check_precision(bits: int) -> int:
    """Validate a precision in bits.

    Raises:
        DomainError: If bits is not an integer >= 64.
    """
    if int(bits) != bits or bits < MIN_PRECISION_BITS:
        raise DomainError(f"Precision must be an integer >= {MIN_PRECISION_BITS} bits, got {bits}")
    return int(bits)


def digits_for_bits(bits: int) -> int:
    """Number of significant decimal digits that represent ``bits`` bits."""
    return int(mpmath.libmp.prec_to_dps(bits))


def relative_difference(x: mpf, y: mpf) -> mpf:
    """|x - y| / max(|x|, |y|), zero when both vanish."""
    scale = max(abs(x), abs(y))
    if scale == 0:
        return mpf(0)
    return abs(x - y) / scale


def factorial_product(n: int) -> int:
    """prod_{j=0}^{n-1} j! as an exact integer."""
    total = 1
    running = 1
    for j in range(1, n):
        running *= j
        total *= running
    return total
