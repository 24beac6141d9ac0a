"""
Equilibrium measure

The constrained equilibrium measure of the log-gas with potential
V(x) = |x| - zeta x and upper constraint 1/(2 gamma). On the bands
[alpha, alpha'] and [beta', beta] the density is an incomplete elliptic
integral; on the saturated region [alpha', beta'] it equals 1/(2 gamma).

Integrals of a function phi against the density are evaluated through an
antiderivative Phi of phi. Exchanging the order of integration turns each
band contribution into a single integral,

    left band:  (1/pi) int_alpha^alpha'  r(x) [Phi(alpha') - Phi(x)] dx
    right band: (1/pi) int_beta'^beta    r(x) [Phi(x) - Phi(beta')] dx

with r(x) = 1/sqrt|R(x)|, R(x) = (x - alpha)(x - alpha')(x - beta')(x - beta),
and the saturated region contributes (Phi(beta') - Phi(alpha')) / (2 gamma).
"""

import logging
import math
from typing import Callable, Iterable, List, Tuple

import numpy as np

from sixvertex.core.errors import DomainError
from sixvertex.core.params import ModelParams
from sixvertex.equilibrium.endpoints import Endpoints, endpoints
from sixvertex.special.quadrature import (
    MAX_NODES,
    fixed_rule,
    integrate_between_roots,
    integrate_half_line,
)
from sixvertex.special.theta import ThetaEvaluator

logger = logging.getLogger(__name__)

Antiderivative = Callable[[np.ndarray], np.ndarray]


def lagrange_multiplier(params: ModelParams) -> float:
    """l = -2 + 2 ln(pi theta_1'(0) / (2 theta_1(omega)))."""
    th = ThetaEvaluator(params.nome)
    return -2.0 + 2.0 * math.log(math.pi * th.theta1_prime0 / (2.0 * th(1, params.omega)))


def _log_kernel(x: float) -> Antiderivative:
    """Antiderivative in y of ln|x - y|, continuous at y = x."""

    def antiderivative(y: np.ndarray) -> np.ndarray:
        d = x - np.asarray(y, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            value = -d * np.log(np.abs(d)) + d
        return np.where(d == 0.0, 0.0, value)

    return antiderivative


def _log_far_kernel(z: float) -> Antiderivative:
    """Antiderivative in y of ln(1 - y/z) for z >= y, accurate for large z."""

    def antiderivative(y: np.ndarray) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        d = z - y
        with np.errstate(divide="ignore", invalid="ignore"):
            value = -d * np.log1p(-y / z) - y
        return np.where(d == 0.0, -y, value)

    return antiderivative


class EquilibriumMeasure:
    """The equilibrium measure of one parameter point.

    Args:
        params: Model parameters.
        tolerance: Convergence tolerance of every single quadrature.
        max_nodes: Largest Gauss-Legendre rule tried.
    """

    def __init__(self, params: ModelParams, tolerance: float = 1e-10, max_nodes: int = MAX_NODES):
        self.params = params
        self.endpoints: Endpoints = endpoints(params)
        self.tolerance = tolerance
        self.max_nodes = max_nodes
        self.saturation = 1.0 / (2.0 * params.gamma)
        self.multiplier = lagrange_multiplier(params)
        logger.debug(f"Equilibrium measure for gamma={params.gamma}, t={params.t}: {self.endpoints}")

    # -- band weights ------------------------------------------------------

    def _left_regular(self, x: np.ndarray) -> np.ndarray:
        e = self.endpoints
        return 1.0 / np.sqrt((e.beta_p - x) * (e.beta - x))

    def _right_regular(self, x: np.ndarray) -> np.ndarray:
        e = self.endpoints
        return 1.0 / np.sqrt((x - e.alpha) * (x - e.alpha_p))

    def _left_band(self, weight: Antiderivative, lo: float, hi: float, breakpoints: Iterable[float] = ()) -> float:
        e = self.endpoints
        return integrate_between_roots(
            lambda x: self._left_regular(x) * weight(x),
            e.alpha,
            e.alpha_p,
            lo,
            hi,
            self.tolerance,
            breakpoints,
            self.max_nodes,
        )

    def _right_band(self, weight: Antiderivative, lo: float, hi: float, breakpoints: Iterable[float] = ()) -> float:
        e = self.endpoints
        return integrate_between_roots(
            lambda x: self._right_regular(x) * weight(x),
            e.beta_p,
            e.beta,
            lo,
            hi,
            self.tolerance,
            breakpoints,
            self.max_nodes,
        )

    def integrate(self, antiderivative: Antiderivative, breakpoints: Iterable[float] = ()) -> float:
        """Integral of phi against the density, given an antiderivative Phi of phi.

        Args:
            antiderivative: Vectorized Phi, continuous on [alpha, beta].
            breakpoints: Points where Phi is not smooth.
        """
        e = self.endpoints
        points = tuple(breakpoints)
        phi_ap = float(antiderivative(np.array(e.alpha_p)))
        phi_bp = float(antiderivative(np.array(e.beta_p)))
        left = self._left_band(lambda x: phi_ap - antiderivative(x), e.alpha, e.alpha_p, points)
        right = self._right_band(lambda x: antiderivative(x) - phi_bp, e.beta_p, e.beta, points)
        return (left + right) / math.pi + (phi_bp - phi_ap) * self.saturation

    # -- density -----------------------------------------------------------

    def density(self, x: float) -> float:
        """Equilibrium density rho(x); zero outside [alpha, beta].

        Raises:
            DomainError: If x is not finite.
            QuadratureError: If the band integral fails to converge.
        """
        if not math.isfinite(x):
            raise DomainError(f"Density argument must be finite, got {x}")
        e = self.endpoints
        if x <= e.alpha or x >= e.beta:
            return 0.0
        if e.alpha_p <= x <= e.beta_p:
            return self.saturation
        one = lambda y: np.ones_like(y)  # noqa: E731
        if x < e.alpha_p:
            return self._left_band(one, e.alpha, x) / math.pi
        return self._right_band(one, x, e.beta) / math.pi

    def mass(self, lo: float, hi: float) -> float:
        """Measure of the interval [lo, hi]."""
        e = self.endpoints
        lo = max(lo, e.alpha)
        hi = min(hi, e.beta)
        if hi <= lo:
            return 0.0
        return self.integrate(lambda y: np.clip(y, lo, hi), breakpoints=(lo, hi))

    def sample_density(self, count: int) -> List[Tuple[float, float]]:
        """(x, rho(x)) at ``count`` equally spaced points of [alpha, beta]."""
        if count < 2:
            raise DomainError(f"Need at least 2 sample points, got {count}")
        e = self.endpoints
        xs = np.linspace(e.alpha, e.beta, count)
        return [(float(x), self.density(float(x))) for x in xs]

    # -- resolvent and g-function -----------------------------------------

    def _sqrt_r(self, x: np.ndarray) -> np.ndarray:
        e = self.endpoints
        return np.sqrt(np.abs((x - e.alpha) * (x - e.alpha_p) * (x - e.beta_p) * (x - e.beta)))

    def tail_integral(self, z: float) -> float:
        """Integral of 1/sqrt(R) from z to +inf (z >= beta) or from -inf to z (z <= alpha)."""
        e = self.endpoints
        scale = max(abs(z), e.beta - e.alpha)
        if z >= e.beta:
            direction = 1
        elif z <= e.alpha:
            direction = -1
        else:
            raise DomainError(f"Tail integral needs z outside ({e.alpha}, {e.beta}), got {z}")
        return integrate_half_line(
            lambda w: 1.0 / self._sqrt_r(w), z, direction, self.tolerance, self.max_nodes, scale=scale
        )

    def resolvent(self, z: float) -> float:
        """Resolvent omega(z) = int rho(x) / (z - x) dx for real z off the support.

        Raises:
            DomainError: If z lies in [alpha, beta].
        """
        e = self.endpoints
        if e.alpha <= z <= e.beta:
            raise DomainError(f"Resolvent is evaluated off the support only, got z={z} in [{e.alpha}, {e.beta}]")
        value = self.tail_integral(z)
        return value if z > e.beta else -value

    def g_function(self, z: float) -> float:
        """g(z) = int ln(z - x) rho(x) dx for real z >= beta.

        Raises:
            DomainError: If z < beta.
        """
        e = self.endpoints
        if z < e.beta:
            raise DomainError(f"g-function is evaluated for z >= beta={e.beta}, got {z}")
        return math.log(z) + self.integrate(_log_far_kernel(z))

    def g_jump(self, x: float) -> float:
        """(g_+(x) - g_-(x)) / (2 pi i) on the real line."""
        e = self.endpoints
        if x <= e.alpha:
            return 1.0
        if x >= e.beta:
            return 0.0
        if x <= e.alpha_p:
            return 1.0 - self.mass(e.alpha, x)
        if x <= e.beta_p:
            return 0.5 * (1.0 + self.params.zeta) - x * self.saturation
        return self.mass(x, e.beta)

    def log_potential(self, x: float) -> float:
        """int ln|x - y| rho(y) dy."""
        return self.integrate(_log_kernel(x), breakpoints=(x,))

    def variational_residual(self, x: float) -> float:
        """2 int ln|x - y| rho(y) dy - (|x| - zeta x) - l.

        Zero on the bands, non-negative on the saturated region and
        non-positive outside [alpha, beta].
        """
        potential = abs(x) - self.params.zeta * x
        return 2.0 * self.log_potential(x) - potential - self.multiplier


def density(x: float, eq: EquilibriumMeasure) -> float:
    return eq.density(x)


def resolvent(z: float, eq: EquilibriumMeasure) -> float:
    return eq.resolvent(z)


def g_function(z: float, eq: EquilibriumMeasure) -> float:
    return eq.g_function(z)


def g_jump(x: float, eq: EquilibriumMeasure) -> float:
    return eq.g_jump(x)


def variational_residual(x: float, eq: EquilibriumMeasure) -> float:
    return eq.variational_residual(x)


def minimal_energy(eq: EquilibriumMeasure, nodes: int = 32) -> float:
    """Minimal value E_0 of the energy functional; an unchecked diagnostic.

    Uses the Euler-Lagrange relation to reduce the double integral to
    E_0 = (1/2) int V rho - l/2 - (1/(4 gamma)) int_{alpha'}^{beta'} s(x) dx,
    where s is the variational residual on the saturated region. The last
    integral uses a fixed ``nodes``-point rule on each side of the origin.
    """
    zeta = eq.params.zeta
    e = eq.endpoints
    potential_energy = eq.integrate(lambda y: 0.5 * y * np.abs(y) - 0.5 * zeta * y * y)

    def slack(xs: np.ndarray) -> np.ndarray:
        return np.array([eq.variational_residual(float(x)) for x in xs])

    saturated_slack = fixed_rule(slack, e.alpha_p, 0.0, nodes) + fixed_rule(slack, 0.0, e.beta_p, nodes)
    energy = 0.5 * potential_energy - 0.5 * eq.multiplier - 0.5 * eq.saturation * saturated_slack
    logger.info(f"Minimal energy diagnostic: E0={energy:.12g}")
    return energy
