"""
Elliptic parametrization of the equilibrium measure

The map u(z) = (1/2) sqrt((beta' - alpha)(beta - alpha')) int_beta^z dz'/sqrt(R(z'))
sends the real line outside the support onto [0, K] and is inverted by
r(u) = (beta(beta' - alpha) - beta'(beta - alpha) sn^2 u) / (beta' - alpha - (beta - alpha) sn^2 u).
The point at infinity goes to u_inf = K (1 - zeta) / 2.
"""

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from sixvertex.core.errors import DomainError
from sixvertex.core.params import ModelParams
from sixvertex.equilibrium.measure import EquilibriumMeasure
from sixvertex.special.elliptic import (
    EllipticContext,
    cn,
    complementary_elliptic_k,
    complete_elliptic_k,
    context_from_gamma,
    dn,
    inverse_sn_squared,
    sn,
)
from sixvertex.special.quadrature import gauss_legendre

logger = logging.getLogger(__name__)


def _half_root(eq: EquilibriumMeasure) -> float:
    e = eq.endpoints
    return 0.5 * math.sqrt((e.beta_p - e.alpha) * (e.beta - e.alpha_p))


def _from_beta(z: float, eq: EquilibriumMeasure) -> float:
    # z' = beta + (z - beta) s^2 on [0, 1]
    e = eq.endpoints
    span = z - e.beta
    if span == 0.0:
        return 0.0

    def integrand(s: np.ndarray) -> np.ndarray:
        x = e.beta + span * s * s
        return 2.0 * math.sqrt(span) / np.sqrt((x - e.alpha) * (x - e.alpha_p) * (x - e.beta_p))

    return gauss_legendre(integrand, 0.0, 1.0, eq.tolerance, max_nodes=eq.max_nodes)


def u_infinity(eq: EquilibriumMeasure) -> float:
    """u at infinity by quadrature over the compactified half line above beta."""
    return _half_root(eq) * eq.tail_integral(eq.endpoints.beta)


def elliptic_coordinate(z: float, eq: EquilibriumMeasure) -> float:
    """u(z) for real z outside (alpha, beta); u(beta) = 0, u(alpha) = K.

    For z < alpha the path continues through infinity, so
    u(z) = u_inf + (1/2) sqrt(...) int_{-inf}^z dz'/sqrt(R).

    Raises:
        DomainError: If alpha < z < beta.
    """
    e = eq.endpoints
    if e.alpha < z < e.beta:
        raise DomainError(f"Elliptic coordinate is defined off ({e.alpha}, {e.beta}), got {z}")
    if z >= e.beta:
        return _half_root(eq) * _from_beta(z, eq)
    return u_infinity(eq) + _half_root(eq) * eq.tail_integral(z)


def elliptic_inverse(u: float, eq: EquilibriumMeasure, ctx: Optional[EllipticContext] = None) -> float:
    """r(u), the inverse of the elliptic coordinate."""
    ctx = ctx or context_from_gamma(eq.params.gamma)
    e = eq.endpoints
    s2 = sn(u, ctx) ** 2
    return (e.beta * (e.beta_p - e.alpha) - e.beta_p * (e.beta - e.alpha) * s2) / (
        (e.beta_p - e.alpha) - (e.beta - e.alpha) * s2
    )


def resolvent_elliptic(z: float, eq: EquilibriumMeasure, ctx: Optional[EllipticContext] = None) -> float:
    """Quadrature-free resolvent -(u(z) - u_inf)/K with u from sn inversion.

    Raises:
        DomainError: If z lies in [alpha, beta].
    """
    e = eq.endpoints
    if e.alpha <= z <= e.beta:
        raise DomainError(f"Resolvent is evaluated off the support only, got z={z}")
    ctx = ctx or context_from_gamma(eq.params.gamma)
    s2 = (e.beta - z) * (e.beta_p - e.alpha) / ((e.beta_p - z) * (e.beta - e.alpha))
    u = inverse_sn_squared(min(max(s2, 0.0), 1.0), ctx)
    u_inf = 0.5 * ctx.K * (1.0 - eq.params.zeta)
    return -(u - u_inf) / ctx.K


@dataclass(frozen=True)
class EllipticConsistency:
    """Residuals of the elliptic parametrization at one parameter point."""

    k_endpoints: float
    k_theta: float
    K: float
    Kprime: float
    u_infinity: float
    kprime_ratio: float
    half_root: float
    u_infinity_ratio: float
    sn_squared: float
    modulus: float
    distances: Dict[str, float] = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        values = [self.kprime_ratio, self.half_root, self.u_infinity_ratio, self.sn_squared, self.modulus]
        return max(values + list(self.distances.values()))

    def as_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["max_residual"] = self.max_residual
        return data


def elliptic_consistency(params: ModelParams, tolerance: float = 1e-12) -> EllipticConsistency:
    """Cross-check the endpoint modulus, the complete integrals and u_inf.

    k comes from the endpoints, K and K' from quadrature of the first-kind
    integral, u_inf from quadrature of the elliptic coordinate. The
    turning-point distances are checked against sn, cn and dn at u_inf.
    """
    eq = EquilibriumMeasure(params, tolerance=tolerance)
    e = eq.endpoints
    ctx = context_from_gamma(params.gamma)

    k = math.sqrt((e.beta - e.alpha) * (e.beta_p - e.alpha_p) / ((e.beta_p - e.alpha) * (e.beta - e.alpha_p)))
    K = complete_elliptic_k(k, tolerance)
    Kprime = complementary_elliptic_k(k, tolerance)
    u_inf = u_infinity(eq)

    s, c, d = sn(u_inf, ctx), cn(u_inf, ctx), dn(u_inf, ctx)
    predicted = {
        "beta-alpha": 2.0 * ctx.K * d / (s * c),
        "beta-alpha_p": 2.0 * ctx.K * c / (s * d),
        "beta-beta_p": 2.0 * ctx.K * c * d / s,
    }
    gaps = e.gaps()
    distances = {key: abs(gaps[key] / value - 1.0) for key, value in predicted.items()}

    report = EllipticConsistency(
        k_endpoints=k,
        k_theta=ctx.k,
        K=K,
        Kprime=Kprime,
        u_infinity=u_inf,
        kprime_ratio=abs(Kprime / K - math.pi / (2.0 * params.gamma)),
        half_root=abs(math.sqrt((e.beta_p - e.alpha) * (e.beta - e.alpha_p)) - 2.0 * K),
        u_infinity_ratio=abs(u_inf / K - 0.5 * (1.0 - params.zeta)),
        sn_squared=abs((e.beta_p - e.alpha) / (e.beta - e.alpha) - s * s),
        modulus=abs(k - ctx.k),
        distances=distances,
    )
    logger.info(f"Elliptic consistency at gamma={params.gamma}, t={params.t}: max residual {report.max_residual:.3e}")
    return report
