"""
Model parameters

ModelParams holds the physical inputs (gamma, t) of the antiferroelectric
six-vertex model and derives every scalar the rest of the package uses:
the anisotropy zeta, the angle omega, the elliptic nome q and the Boltzmann
weights a, b, c.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import mpmath
from mpmath import mpf

from sixvertex.core.errors import DomainError


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the model in the antiferroelectric region.

    The weights are a = sinh(gamma - t), b = sinh(gamma + t), c = sinh(2 gamma)
    and Delta = -cosh(2 gamma) < -1.

    Args:
        gamma: Anisotropy parameter, strictly positive.
        t: Asymmetry parameter with |t| < gamma.

    Raises:
        DomainError: If gamma <= 0 or |t| >= gamma.
    """

    gamma: float
    t: float

    def __post_init__(self) -> None:
        gamma = float(self.gamma)
        t = float(self.t)
        if not math.isfinite(gamma) or not math.isfinite(t):
            raise DomainError(f"Parameters must be finite, got gamma={self.gamma}, t={self.t}")
        if gamma <= 0:
            raise DomainError(f"gamma must be positive, got {gamma}")
        if abs(t) >= gamma:
            raise DomainError(f"|t| must be smaller than gamma (antiferroelectric region), got gamma={gamma}, t={t}")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "t", t)

    @property
    def zeta(self) -> float:
        return self.t / self.gamma

    @property
    def omega(self) -> float:
        """omega = pi (1 + zeta) / 2, in (0, pi)."""
        return math.pi * (1.0 + self.zeta) / 2.0

    @property
    def q(self) -> float:
        """Elliptic nome q = exp(-pi^2 / (2 gamma))."""
        return math.exp(-math.pi**2 / (2.0 * self.gamma))

    @property
    def nome(self) -> Any:
        from sixvertex.special.theta import Nome

        return Nome.from_gamma(self.gamma)

    @property
    def a(self) -> float:
        return math.sinh(self.gamma - self.t)

    @property
    def b(self) -> float:
        return math.sinh(self.gamma + self.t)

    @property
    def c(self) -> float:
        return math.sinh(2.0 * self.gamma)

    @property
    def Delta(self) -> float:
        return -math.cosh(2.0 * self.gamma)

    def big_weights(self) -> Tuple[mpf, mpf, mpf]:
        """(a, b, c) as mpf at the current mpmath working precision."""
        gamma = mpf(self.gamma)
        t = mpf(self.t)
        return mpmath.sinh(gamma - t), mpmath.sinh(gamma + t), mpmath.sinh(2 * gamma)

    def reflected(self) -> "ModelParams":
        """Parameters with t -> -t (exchanges the a and b weights)."""
        return ModelParams(self.gamma, -self.t)

    def as_dict(self) -> Dict[str, float]:
        return {
            "gamma": self.gamma,
            "t": self.t,
            "zeta": self.zeta,
            "omega": self.omega,
            "q": self.q,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "Delta": self.Delta,
        }
