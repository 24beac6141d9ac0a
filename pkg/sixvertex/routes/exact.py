"""
Exact finite-n partition function

Z_n from the Hankel determinant of the lattice moments
m_j = sum_l l^j exp(2 t l - 2 gamma |l|):

    tau_n = det(phi^{(i+j)}(t)) = 2^{n^2} prod_k h_k,    phi^{(k)} = 2^{k+1} m_k,
    Z_n   = (sinh(gamma - t) sinh(gamma + t))^{n^2} tau_n / (prod_{j<n} j!)^2,

where h_k are the norms of the monic polynomials orthogonal on the integer
lattice. All arithmetic is mpmath at an explicit working precision; since
the Hankel matrix is exponentially ill-conditioned in n, results are
accepted only when two working precisions agree (the precision ladder).
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import mpmath
from mpmath import mpf

from sixvertex.core.bigreal import (
    DEFAULT_PRECISION_BITS,
    GUARD_BITS,
    check_precision,
    factorial_product,
    relative_difference,
)
from sixvertex.core.errors import DivergentSumError, DomainError, PrecisionExhaustedError
from sixvertex.core.params import ModelParams
from sixvertex.core.route import PartitionRoute
from sixvertex.utils.serialization import format_big

logger = logging.getLogger(__name__)

MAX_DOUBLINGS = 4
AGREEMENT_SLACK_BITS = 16


@dataclass(frozen=True)
class MomentTable:
    """Lattice moments m_0..m_{2n-2} summed over |l| <= L."""

    params: ModelParams
    precision_bits: int
    moments: Tuple[mpf, ...]
    L: int

    @property
    def size(self) -> int:
        """Largest n the table supports."""
        return (len(self.moments) + 1) // 2


@dataclass(frozen=True)
class ExactSolution:
    """Result of the exact route at one (params, n)."""

    n: int
    tau_n: mpf
    h: Tuple[mpf, ...]
    Z_n: mpf
    precision_bits: int
    est_rel_err: mpf
    working_bits: int
    attempts: int

    def to_dict(self) -> Dict[str, Any]:
        bits = self.precision_bits
        return {
            "n": self.n,
            "precision_bits": bits,
            "tau_n": format_big(self.tau_n, bits),
            "h": [format_big(value, bits) for value in self.h],
            "Z_n": format_big(self.Z_n, bits),
            "est_rel_err": format_big(self.est_rel_err, 53),
            "working_bits": self.working_bits,
            "attempts": self.attempts,
        }


@dataclass(frozen=True)
class Recurrence:
    """Coefficients of x P_k = P_{k+1} + a_k P_k + b_k P_{k-1}."""

    a: Tuple[mpf, ...]
    b: Tuple[mpf, ...] = field(default_factory=tuple)


def truncation_bound(params: ModelParams, n: int, bits: int) -> int:
    """Smallest L whose discarded tail is below 2^-bits relative to m_0.

    The tail of every stored moment is bounded by
    (2n) L^{2n-2} e^{-2 delta L} / (1 - e^{-2 delta}) with delta = gamma - |t|.
    The bound is decreasing beyond L = (n - 1)/delta, where the search starts.
    """
    delta = params.gamma - abs(params.t)
    m0_log = math.log(params.c / (2.0 * params.a * params.b))
    floor_log = math.log(-math.expm1(-2.0 * delta))
    power = 2 * n - 2

    def excess(L: int) -> float:
        return math.log(2 * n) + power * math.log(L) - 2.0 * delta * L - floor_log + bits * math.log(2.0) - m0_log

    lo = max(1, math.ceil(power / (2.0 * delta)))
    if excess(lo) < 0:
        return lo
    hi = lo
    while excess(hi) >= 0:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if excess(mid) < 0:
            hi = mid
        else:
            lo = mid
    return hi


def moments(params: ModelParams, n: int, precision_bits: int) -> MomentTable:
    """Moments m_0..m_{2n-2} of the lattice weight exp(2 t l - 2 gamma |l|).

    Summation runs at precision_bits + GUARD_BITS.

    Raises:
        DivergentSumError: If |t| >= gamma.
        DomainError: If n < 1 or the precision is invalid.
    """
    if abs(params.t) >= params.gamma:
        raise DivergentSumError(f"Moment sum diverges for |t| >= gamma (gamma={params.gamma}, t={params.t})")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    bits = check_precision(precision_bits)
    L = truncation_bound(params, n, bits)
    count = 2 * n - 1
    with mpmath.workprec(bits + GUARD_BITS):
        gamma, t = mpf(params.gamma), mpf(params.t)
        x = mpmath.exp(-2 * (gamma - t))
        y = mpmath.exp(-2 * (gamma + t))
        sums = [mpf(0)] * count
        sums[0] = mpf(1)
        xk, yk = mpf(1), mpf(1)
        for k in range(1, L + 1):
            xk *= x
            yk *= y
            kpow = mpf(1)
            for j in range(count):
                # l = k contributes k^j x^k, l = -k contributes (-k)^j y^k
                sums[j] += kpow * (xk + yk if j % 2 == 0 else xk - yk)
                kpow *= k
    logger.debug(f"Moments for n={n} at {bits} bits: L={L}")
    return MomentTable(params=params, precision_bits=bits, moments=tuple(sums), L=L)


def _require(table: MomentTable, n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if table.size < n:
        raise DomainError(f"Moment table supports n <= {table.size}, got n={n}")


def _cholesky(table: MomentTable, n: int) -> Tuple[Any, List[mpf]]:
    """Cholesky factor of the diagonally scaled Hankel matrix m_{i+j}/sqrt(m_2i m_2j)."""
    m = table.moments
    scale = [mpmath.sqrt(m[2 * i]) for i in range(n)]
    S = mpmath.matrix(n, n)
    for i in range(n):
        for j in range(n):
            S[i, j] = m[i + j] / (scale[i] * scale[j])
    try:
        return mpmath.cholesky(S), scale
    except (ValueError, ZeroDivisionError) as e:
        raise PrecisionExhaustedError(
            f"Hankel factorization lost positivity at {mpmath.mp.prec} bits (n={n}): {e}", bits=mpmath.mp.prec
        ) from e


def norms(table: MomentTable, n: int) -> List[mpf]:
    """Norms h_0..h_{n-1} of the monic orthogonal polynomials.

    Raises:
        PrecisionExhaustedError: If a pivot is not positive.
    """
    _require(table, n)
    with mpmath.workprec(table.precision_bits):
        factor, scale = _cholesky(table, n)
        h = [(factor[k, k] * scale[k]) ** 2 for k in range(n)]
    if any(value <= 0 for value in h):
        raise PrecisionExhaustedError(f"Non-positive norm at {table.precision_bits} bits", bits=table.precision_bits)
    return h


def tau(table: MomentTable, n: int) -> mpf:
    """tau_n = 2^{n^2} prod h_k."""
    h = norms(table, n)
    with mpmath.workprec(table.precision_bits):
        return mpmath.ldexp(mpmath.fprod(h), n * n)


def _phi_row(table: MomentTable, row: int, shift: int, n: int) -> List[mpf]:
    m = table.moments
    return [mpmath.ldexp(m[row + col + shift], row + col + shift + 1) for col in range(n)]


def _phi_det(table: MomentTable, n: int, shifts: Optional[Sequence[int]] = None) -> mpf:
    """det(phi^{(i+j+shift_i)}); shifts differentiate individual rows in t."""
    if n == 0:
        return mpf(1)
    shifts = shifts or [0] * n
    if 2 * (n - 1) + max(shifts) >= len(table.moments):
        raise DomainError(f"Moment table too short for a {n}x{n} phi-Hankel determinant with shifts {list(shifts)}")
    rows = [_phi_row(table, i, shifts[i], n) for i in range(n)]
    return mpmath.det(mpmath.matrix(rows))


def tau_hankel(table: MomentTable, n: int) -> mpf:
    """tau_n as the determinant of the phi-derivative Hankel matrix."""
    with mpmath.workprec(table.precision_bits):
        return _phi_det(table, n)


def _solve(params: ModelParams, n: int, bits: int) -> Tuple[mpf, List[mpf], mpf]:
    table = moments(params, n, bits)
    h = norms(table, n)
    with mpmath.workprec(bits):
        tau_n = mpmath.ldexp(mpmath.fprod(h), n * n)
        a, b, _ = params.big_weights()
        Z = (a * b) ** (n * n) * tau_n / mpf(factorial_product(n)) ** 2
    return tau_n, h, Z


def partition_exact(
    params: ModelParams,
    n: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    start_bits: Optional[int] = None,
) -> ExactSolution:
    """Z_n by the Izergin-Korepin Hankel formula with the precision ladder.

    Each attempt computes at working precision W and 2W and is accepted when
    the two values of Z_n agree to 2^{-P+16}, P = precision_bits. A pivot
    failure or disagreement doubles W. W starts at ``start_bits`` or
    max(P, 256, 96 n).

    Raises:
        PrecisionExhaustedError: After MAX_DOUBLINGS doublings without agreement.
    """
    target = check_precision(precision_bits)
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    working = check_precision(start_bits) if start_bits is not None else max(target, 256, 96 * n)
    threshold = mpmath.ldexp(mpf(1), -target + AGREEMENT_SLACK_BITS)

    for attempt in range(1, MAX_DOUBLINGS + 2):
        logger.debug(f"Exact n={n}: attempt {attempt} at {working}/{2 * working} bits")
        try:
            _, _, Z_low = _solve(params, n, working)
            tau_n, h, Z_high = _solve(params, n, 2 * working)
        except PrecisionExhaustedError as e:
            logger.info(f"Exact n={n}: {e}; doubling working precision")
            working *= 2
            continue
        with mpmath.workprec(2 * working):
            error = relative_difference(Z_low, Z_high)
        if error <= threshold:
            logger.info(f"Exact n={n} accepted at {working} bits after {attempt} attempt(s)")
            return ExactSolution(
                n=n,
                tau_n=tau_n,
                h=tuple(h),
                Z_n=Z_high,
                precision_bits=target,
                est_rel_err=error,
                working_bits=working,
                attempts=attempt,
            )
        logger.info(f"Exact n={n}: {working} and {2 * working} bits disagree ({mpmath.nstr(error, 3)})")
        working *= 2

    raise PrecisionExhaustedError(
        f"Exact solver for n={n} did not stabilize after {MAX_DOUBLINGS} doublings "
        f"(reached {working // 2} bits)",
        bits=working // 2,
    )


def toda_residual(params: ModelParams, n: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """Relative residual of tau_n tau_n'' - tau_n'^2 = tau_{n+1} tau_{n-1}.

    t-derivatives are exact: differentiating row i of the phi-Hankel matrix
    shifts its entries to phi^{(i+j+1)}. Evaluated at twice the requested
    precision (and at least 96(n+1) bits).
    """
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    bits = max(2 * check_precision(precision_bits), 96 * (n + 1))
    table = moments(params, n + 1, bits)
    with mpmath.workprec(bits):
        tau_n = _phi_det(table, n)
        tau_up = _phi_det(table, n + 1)
        tau_down = _phi_det(table, n - 1)
        first = mpf(0)
        second = mpf(0)
        for i in range(n):
            shifts = [0] * n
            shifts[i] = 1
            first += _phi_det(table, n, shifts)
            for k in range(n):
                both = list(shifts)
                both[k] += 1
                second += _phi_det(table, n, both)
        residual = abs(tau_n * second - first**2 - tau_up * tau_down) / (tau_up * tau_down)
    logger.debug(f"Toda residual n={n}: {mpmath.nstr(residual, 5)}")
    return residual


def _monic_coefficients(table: MomentTable, n: int) -> List[List[mpf]]:
    """Coefficient rows (ascending powers) of the monic P_0..P_{n-1}."""
    factor, scale = _cholesky(table, n)
    # H = M M^T with M = diag(scale) L; rows of M^{-1} are orthonormal polynomials
    M = mpmath.matrix(n, n)
    for i in range(n):
        for j in range(i + 1):
            M[i, j] = scale[i] * factor[i, j]
    inverse = mpmath.inverse(M)
    return [[inverse[k, j] / inverse[k, k] for j in range(k + 1)] for k in range(n)]


def orthogonality_residual(table: MomentTable, n: int) -> mpf:
    """max |<P_j, P_k> - delta_jk h_k| / max h over the truncated lattice."""
    _require(table, n)
    params = table.params
    with mpmath.workprec(table.precision_bits + GUARD_BITS):
        coefficients = _monic_coefficients(table, n)
        gamma, t = mpf(params.gamma), mpf(params.t)
        gram = [[mpf(0)] * n for _ in range(n)]
        for l in range(-table.L, table.L + 1):
            weight = mpmath.exp(2 * t * l - 2 * gamma * abs(l))
            values = [mpmath.polyval(list(reversed(row)), l) for row in coefficients]
            for j in range(n):
                for k in range(j + 1):
                    gram[j][k] += values[j] * values[k] * weight
        h = [gram[k][k] for k in range(n)]
        h_max = max(h)
        worst = mpf(0)
        for j in range(n):
            for k in range(j):
                worst = max(worst, abs(gram[j][k]) / h_max)
    expected = norms(table, n)
    with mpmath.workprec(table.precision_bits):
        for k in range(n):
            worst = max(worst, abs(h[k] - expected[k]) / h_max)
    return worst


def recurrence_coefficients(table: MomentTable, n: int) -> Recurrence:
    """Three-term recurrence coefficients from the factorization.

    a_k = c_{k,k-1} - c_{k+1,k} for k < n-1, where c_{k,k-1} is the
    subleading coefficient of P_k, and b_k = h_k / h_{k-1} for 1 <= k < n.
    """
    _require(table, n)
    h = norms(table, n)
    with mpmath.workprec(table.precision_bits):
        coefficients = _monic_coefficients(table, n)
        subleading = [row[k - 1] if k > 0 else mpf(0) for k, row in enumerate(coefficients)]
        a = tuple(subleading[k] - subleading[k + 1] for k in range(n - 1))
        b = tuple(h[k] / h[k - 1] for k in range(1, n))
    return Recurrence(a=a, b=b)


class ExactRoute(PartitionRoute):
    """Hankel-determinant route with the precision ladder."""

    name = "exact"

    def supports(self, n: int) -> bool:
        return n >= 1

    def log_partition(self, params: ModelParams, n: int, **options: Any) -> mpf:
        solution = partition_exact(
            params,
            n,
            precision_bits=options.get("precision_bits", DEFAULT_PRECISION_BITS),
            start_bits=options.get("start_bits"),
        )
        with mpmath.workprec(solution.working_bits):
            return mpmath.log(solution.Z_n)

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "method": "Hankel determinant of lattice moments",
            "min_n": 1,
            "max_n": None,
            "max_doublings": MAX_DOUBLINGS,
        }
