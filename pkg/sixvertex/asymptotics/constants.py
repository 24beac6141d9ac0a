"""
Large-n asymptotics of the DWBC partition function

In the antiferroelectric phase

    Z_n         = C theta_4(n omega) F^{n^2} (1 + O(1/n)),
    h_n/(n!)^2  = G^{2n+1} theta_4((n+1) omega) / theta_4(n omega) (1 + O(1/n^2)),

with F = pi a b theta_1'(0) / (2 gamma theta_1(omega)), G = F / (2ab) and
A = 2 gamma G. C has no closed form; it is estimated from exact values.
Comparisons with the exact route run in the log domain.
"""

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import mpmath
from mpmath import mpf

from sixvertex.core.bigreal import DEFAULT_PRECISION_BITS, factorial_product
from sixvertex.core.errors import DomainError
from sixvertex.core.params import ModelParams
from sixvertex.core.route import PartitionRoute
from sixvertex.equilibrium.endpoints import endpoints
from sixvertex.special.theta import ThetaEvaluator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AsymptoticConstants:
    params: ModelParams
    F: float
    G: float
    A: float
    l: float
    log_F: float

    def as_dict(self) -> Dict[str, float]:
        data = asdict(self)
        data["params"] = self.params.as_dict()
        return data


@dataclass(frozen=True)
class M1Entries:
    """Magnitudes of the off-diagonal entries of M_1 in clean and raw form."""

    clean_12: float
    clean_21: float
    raw_12: float
    raw_21: float

    @property
    def max_deviation(self) -> float:
        return max(abs(self.clean_12 - self.raw_12), abs(self.clean_21 - self.raw_21))


@dataclass(frozen=True)
class CEstimate:
    n_values: Tuple[int, ...]
    c_values: Tuple[float, ...]
    final: float
    increments: Tuple[float, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class FirstOrderCoefficients:
    """1/n coefficients of the h-ratio expansion: f, the Stirling shift -1/6 and their sum f_0."""

    c1: float
    stirling_shift: float
    f0: float


def constants(params: ModelParams) -> AsymptoticConstants:
    th = ThetaEvaluator(params.nome)
    A = math.pi * th.theta1_prime0 / (2.0 * th(1, params.omega))
    G = A / (2.0 * params.gamma)
    F = 2.0 * G * params.a * params.b
    return AsymptoticConstants(params=params, F=F, G=G, A=A, l=2.0 * math.log(A) - 2.0, log_F=math.log(F))


def log_h_ratio_asym(params: ModelParams, n: int) -> float:
    """ln of G^{2n+1} theta_4((n+1) omega) / theta_4(n omega)."""
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    th = ThetaEvaluator(params.nome)
    G = constants(params).G
    omega = params.omega
    return (2 * n + 1) * math.log(G) + math.log(th(4, (n + 1) * omega)) - math.log(th(4, n * omega))


def h_ratio_asym(params: ModelParams, n: int) -> mpf:
    return mpmath.exp(mpf(log_h_ratio_asym(params, n)))


def z_asym(params: ModelParams, n: int, C: float) -> float:
    """ln C + ln theta_4(n omega) + n^2 ln F.

    Raises:
        DomainError: If C <= 0 or n < 1.
    """
    if C <= 0:
        raise DomainError(f"C must be positive, got {C}")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    th = ThetaEvaluator(params.nome)
    return math.log(C) + math.log(th(4, n * params.omega)) + n * n * constants(params).log_F


def _exact_logs(
    params: ModelParams, n_max: int, precision_bits: Optional[int]
) -> Tuple[Dict[int, mpf], List[mpf], int]:
    """ln Z_n for n <= n_max and ln h_k for k <= n_max from a single ladder solve at n_max + 1."""
    from sixvertex.routes.exact import partition_exact

    solution = partition_exact(params, n_max + 1, precision_bits or DEFAULT_PRECISION_BITS)
    bits = solution.working_bits
    with mpmath.workprec(bits):
        a, b, _ = params.big_weights()
        log_ab2 = mpmath.log(2 * a * b)
        log_h = [mpmath.log(h) for h in solution.h]
        logs: Dict[int, mpf] = {}
        running = mpf(0)
        for n in range(1, n_max + 1):
            running += log_h[n - 1]
            logs[n] = n * n * log_ab2 + running - 2 * mpmath.log(factorial_product(n))
    return logs, log_h, bits


def estimate_C(
    params: ModelParams, n_values: Sequence[int], precision_bits: Optional[int] = None
) -> CEstimate:
    """c_n = Z_n / (theta_4(n omega) F^{n^2}) over n_values; the last one is the estimate."""
    n_values = tuple(sorted(n_values))
    if not n_values or n_values[0] < 1:
        raise DomainError(f"n_values must be a non-empty set of positive sizes, got {n_values}")
    logs, _, bits = _exact_logs(params, n_values[-1], precision_bits)
    th = ThetaEvaluator(params.nome)
    log_F = constants(params).log_F
    c_values = []
    with mpmath.workprec(bits):
        for n in n_values:
            c_values.append(float(mpmath.exp(logs[n] - math.log(th(4, n * params.omega)) - n * n * mpf(log_F))))
    increments = tuple(abs(c_values[i + 1] / c_values[i] - 1.0) for i in range(len(c_values) - 1))
    logger.info(f"Estimated C={c_values[-1]:.12g} from n={n_values[0]}..{n_values[-1]}")
    return CEstimate(n_values=n_values, c_values=tuple(c_values), final=c_values[-1], increments=increments)


def convergence_table(
    params: ModelParams, n_values: Sequence[int], precision_bits: Optional[int] = None
) -> Tuple[List[Dict[str, Any]], Dict[str, float]]:
    """Rows n, Z_exact_log, Z_asym_log, r_n, n2_dev plus a summary.

    r_n is the ratio of the exact h_n/(n!)^2 to its asymptote; n2_dev is
    n^2 |r_n - 1|. The summary carries the C estimate (last c_n) and the
    largest n^2 |r_n - 1| and n |c_n / C - 1|.
    """
    n_values = tuple(sorted(n_values))
    if not n_values or n_values[0] < 1:
        raise DomainError(f"n_values must be a non-empty set of positive sizes, got {n_values}")
    logs, log_h, bits = _exact_logs(params, n_values[-1], precision_bits)
    th = ThetaEvaluator(params.nome)
    log_F = constants(params).log_F

    with mpmath.workprec(bits):
        c_log = {n: logs[n] - math.log(th(4, n * params.omega)) - n * n * mpf(log_F) for n in n_values}
    C = float(mpmath.exp(c_log[n_values[-1]]))

    rows: List[Dict[str, Any]] = []
    max_n2_dev = 0.0
    max_n_dev = 0.0
    for n in n_values:
        with mpmath.workprec(bits):
            log_ratio = log_h[n] - 2 * mpmath.log(mpmath.factorial(n)) - log_h_ratio_asym(params, n)
            r_n = float(mpmath.exp(log_ratio))
            n_dev = n * abs(float(mpmath.expm1(c_log[n] - c_log[n_values[-1]])))
        n2_dev = n * n * abs(r_n - 1.0)
        max_n2_dev = max(max_n2_dev, n2_dev)
        max_n_dev = max(max_n_dev, n_dev)
        rows.append(
            {
                "n": n,
                "Z_exact_log": float(logs[n]),
                "Z_asym_log": z_asym(params, n, C),
                "r_n": r_n,
                "n2_dev": n2_dev,
            }
        )
    summary = {"C_estimate": C, "max_n2_dev": max_n2_dev, "max_n_dev": max_n_dev}
    logger.info(f"Convergence table for n={n_values[0]}..{n_values[-1]}: {summary}")
    return rows, summary


def m1_entries(params: ModelParams, n: int) -> M1Entries:
    """|[M_1]_12| and |[M_1]_21| from the clean and the raw theta-quotient forms.

    Clean: A theta_4((n+1) omega) / theta_4(n omega) and A theta_4((n-1) omega) / theta_4(n omega).
    Raw: theta_3 quotients at u_inf = pi/2 - omega/2, d = -u_inf and
    Omega/2 = n omega + pi/2, times ((beta - beta') + (alpha' - alpha)) / 4.
    """
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    th = ThetaEvaluator(params.nome)
    omega = params.omega
    A = constants(params).A
    t4n = th(4, n * omega)
    clean_12 = A * th(4, (n + 1) * omega) / t4n
    clean_21 = A * th(4, (n - 1) * omega) / t4n

    e = endpoints(params)
    prefactor = 0.25 * ((e.beta - e.beta_p) + (e.alpha_p - e.alpha))
    u_inf = 0.5 * (math.pi - omega)
    d = -u_inf
    half_big_omega = n * omega + 0.5 * math.pi
    raw_12 = abs(
        th(3, -u_inf + d + half_big_omega) * th(3, u_inf + d) / (th(3, u_inf + d + half_big_omega) * th(3, -u_inf + d))
    )
    raw_21 = abs(
        th(3, u_inf - d + half_big_omega) * th(3, -u_inf - d) / (th(3, -u_inf - d + half_big_omega) * th(3, u_inf - d))
    )
    return M1Entries(
        clean_12=float(clean_12),
        clean_21=float(clean_21),
        raw_12=float(raw_12 * prefactor),
        raw_21=float(raw_21 * prefactor),
    )


def first_order_coefficients(params: ModelParams, n: int) -> FirstOrderCoefficients:
    from sixvertex.asymptotics.subleading import f_value

    c1 = f_value(params, n)
    return FirstOrderCoefficients(c1=c1, stirling_shift=-1.0 / 6.0, f0=c1 - 1.0 / 6.0)


class AsymptoticRoute(PartitionRoute):
    """Leading large-n asymptote; needs the constant C as an option."""

    name = "asym"

    def supports(self, n: int) -> bool:
        return n >= 1

    def log_partition(self, params: ModelParams, n: int, **options: Any) -> mpf:
        C = options.get("C")
        if C is None:
            raise DomainError("The asymptotic route needs a fitted or given constant C")
        return mpf(z_asym(params, n, C))

    def describe(self) -> Dict[str, Any]:
        return {"name": self.name, "method": "C theta_4(n omega) F^(n^2)", "min_n": 1, "max_n": None}
