"""
Support endpoints of the equilibrium measure

The measure is supported on [alpha, beta] and saturated on [alpha', beta'].
The four endpoints are logarithmic derivatives of the theta functions at
omega/2, and their differences have product forms in the theta constants.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict

from sixvertex.core.params import ModelParams
from sixvertex.special.theta import Nome, ThetaEvaluator


@dataclass(frozen=True)
class Endpoints:
    """The endpoints alpha < alpha' < 0 < beta' < beta."""

    alpha: float
    alpha_p: float
    beta_p: float
    beta: float

    @property
    def centroid(self) -> float:
        return 0.25 * (self.alpha + self.alpha_p + self.beta_p + self.beta)

    @property
    def left_band(self) -> float:
        return self.alpha_p - self.alpha

    @property
    def right_band(self) -> float:
        return self.beta - self.beta_p

    def gaps(self) -> Dict[str, float]:
        """All six pairwise differences, keyed like ``beta-alpha``."""
        return {
            "alpha_p-alpha": self.alpha_p - self.alpha,
            "beta_p-alpha_p": self.beta_p - self.alpha_p,
            "beta-beta_p": self.beta - self.beta_p,
            "beta-alpha": self.beta - self.alpha,
            "beta-alpha_p": self.beta - self.alpha_p,
            "beta_p-alpha": self.beta_p - self.alpha,
        }

    def is_ordered(self) -> bool:
        return self.alpha < self.alpha_p < 0.0 < self.beta_p < self.beta

    def as_dict(self) -> Dict[str, float]:
        return {
            "alpha": self.alpha,
            "alpha_p": self.alpha_p,
            "beta_p": self.beta_p,
            "beta": self.beta,
            "centroid": self.centroid,
        }


def endpoints_from_theta(omega: float, nome: Any) -> Endpoints:
    """Endpoints as functions of the angle omega and the nome only."""
    th = ThetaEvaluator(Nome.coerce(nome))
    half = 0.5 * omega
    return Endpoints(
        alpha=-math.pi * th.log_derivative(1, half),
        alpha_p=-math.pi * th.log_derivative(4, half),
        beta_p=-math.pi * th.log_derivative(3, half),
        beta=-math.pi * th.log_derivative(2, half),
    )


def endpoints(params: ModelParams) -> Endpoints:
    """Endpoints of the support for the given model parameters."""
    return endpoints_from_theta(params.omega, params.nome)


def gaps_from_theta(omega: float, nome: Any) -> Dict[str, float]:
    """The six endpoint differences from their theta-product forms."""
    th = ThetaEvaluator(Nome.coerce(nome))
    half = 0.5 * omega
    t1, t2, t3, t4 = (th(j, half) for j in (1, 2, 3, 4))
    a2, a3, a4 = th.a2**2, th.a3**2, th.a4**2
    pi = math.pi
    return {
        "alpha_p-alpha": pi * a4 * t2 * t3 / (t1 * t4),
        "beta_p-alpha_p": pi * a2 * t1 * t2 / (t3 * t4),
        "beta-beta_p": pi * a4 * t1 * t4 / (t2 * t3),
        "beta-alpha": pi * a2 * t3 * t4 / (t1 * t2),
        "beta-alpha_p": pi * a3 * t1 * t3 / (t2 * t4),
        "beta_p-alpha": pi * a3 * t2 * t4 / (t1 * t3),
    }


def endpoint_differences(params: ModelParams) -> Dict[str, float]:
    return gaps_from_theta(params.omega, params.nome)


def centroid_formula(params: ModelParams) -> float:
    """Closed form -(pi/2) theta_2'(pi zeta/2) / theta_2(pi zeta/2) of the centroid."""
    th = ThetaEvaluator(params.nome)
    return -0.5 * math.pi * th.log_derivative(2, 0.5 * math.pi * params.zeta)
