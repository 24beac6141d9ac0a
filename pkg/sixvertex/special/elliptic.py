"""
Jacobi elliptic functions

Complete integrals, sn/cn/dn and the Jacobi zeta function expressed through
theta ratios with argument pi u / (2K). The nome is the model nome
q = exp(-pi^2 / (2 gamma)), so K = (pi/2) theta_3(0)^2, K'/K = pi/(2 gamma)
and the modulus is k = theta_2(0)^2 / theta_3(0)^2.

Quadrature of the first-kind integral is available as an independent
cross-check; production code never uses it.
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import mpmath
import numpy as np

from sixvertex.core.errors import ConvergenceError, DomainError
from sixvertex.special.quadrature import gauss_legendre, integrate_between_roots
from sixvertex.special.theta import Nome, ThetaEvaluator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EllipticContext:
    """Modulus, complete integrals and nome of one elliptic parametrization."""

    k: float
    K: float
    Kprime: float
    nome: Nome

    @cached_property
    def theta(self) -> ThetaEvaluator:
        return ThetaEvaluator(self.nome)

    def argument(self, u: Any) -> Any:
        """Theta argument pi u / (2K)."""
        return math.pi * u / (2.0 * self.K)


def context_from_gamma(gamma: float) -> EllipticContext:
    """Build the elliptic context of the model with anisotropy gamma.

    Raises:
        DomainError: If gamma <= 0.
    """
    if gamma <= 0:
        raise DomainError(f"gamma must be positive, got {gamma}")
    nome = Nome.from_gamma(gamma)
    th = ThetaEvaluator(nome)
    K = 0.5 * math.pi * th.a3**2
    context = EllipticContext(
        k=th.a2**2 / th.a3**2,
        K=K,
        Kprime=K * math.pi / (2.0 * gamma),
        nome=nome,
    )
    logger.debug(f"Elliptic context for gamma={gamma}: k={context.k:.12g}, K={K:.12g}")
    return context


def sn(u: Any, ctx: EllipticContext) -> Any:
    th = ctx.theta
    v = ctx.argument(u)
    return th.a3 / th.a2 * th(1, v) / th(4, v)


def cn(u: Any, ctx: EllipticContext) -> Any:
    th = ctx.theta
    v = ctx.argument(u)
    return th.a4 / th.a2 * th(2, v) / th(4, v)


def dn(u: Any, ctx: EllipticContext) -> Any:
    th = ctx.theta
    v = ctx.argument(u)
    return th.a4 / th.a3 * th(3, v) / th(4, v)


def jacobi_Z(u: Any, ctx: EllipticContext) -> Any:
    """Jacobi zeta function Theta'(u)/Theta(u) with Theta(u) = theta_4(pi u / 2K)."""
    v = ctx.argument(u)
    return math.pi / (2.0 * ctx.K) * ctx.theta(4, v, 1) / ctx.theta(4, v)


def complete_elliptic_k(k: float, tolerance: float = 1e-12) -> float:
    """K(k) by quadrature of the trigonometric form of the first-kind integral."""
    if not 0 <= k < 1:
        raise DomainError(f"Modulus must satisfy 0 <= k < 1, got {k}")
    k2 = k * k
    return gauss_legendre(lambda phi: 1.0 / np.sqrt(1.0 - k2 * np.sin(phi) ** 2), 0.0, 0.5 * math.pi, tolerance)


def complementary_elliptic_k(k: float, tolerance: float = 1e-12) -> float:
    """K'(k) as the integral of 1/sqrt((v^2 - 1)(1 - k^2 v^2)) over [1, 1/k]."""
    if not 0 < k < 1:
        raise DomainError(f"Modulus must satisfy 0 < k < 1, got {k}")
    # (v^2 - 1)(1 - k^2 v^2) = k (v - 1)(1/k - v)(v + 1)(1 + k v)
    return integrate_between_roots(
        lambda v: 1.0 / np.sqrt(k * (v + 1.0) * (1.0 + k * v)),
        1.0,
        1.0 / k,
        1.0,
        1.0 / k,
        tolerance,
    )


def inverse_sn_squared(s2: float, ctx: EllipticContext) -> float:
    """The u in [0, K] with sn(u)^2 = s2.

    Solved with a bracketed Illinois iteration on sn(u) - sqrt(s2) for
    s2 <= 1/2 and on cn(u) - sqrt(1 - s2) otherwise, so that the target
    function has a non-vanishing slope at the root.

    Raises:
        DomainError: If s2 is outside [0, 1].
        ConvergenceError: If the root cannot be located.
    """
    if not 0.0 <= s2 <= 1.0:
        raise DomainError(f"sn^2 must lie in [0, 1], got {s2}")
    if s2 == 0.0:
        return 0.0
    if s2 == 1.0:
        return ctx.K
    if s2 <= 0.5:
        target = math.sqrt(s2)

        def residual(u: Any) -> Any:
            return sn(float(u), ctx) - target

    else:
        target = math.sqrt(1.0 - s2)

        def residual(u: Any) -> Any:
            return cn(float(u), ctx) - target

    try:
        root = mpmath.findroot(residual, (0.0, ctx.K), solver="illinois", verify=False)
    except (ValueError, ZeroDivisionError) as e:
        raise ConvergenceError(f"Could not invert sn^2 = {s2}: {e}") from e
    u = float(root)
    if not 0.0 <= u <= ctx.K or abs(residual(u)) > 1e-10:
        raise ConvergenceError(f"Inversion of sn^2 = {s2} did not converge (u={u})")
    return u
