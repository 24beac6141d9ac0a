"""
Jacobi theta functions

Series evaluation of theta_1..theta_4 and their z-derivatives with nome q,

    theta_1(z) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) z)
    theta_2(z) = 2 sum_{n>=0} q^{(n+1/2)^2} cos((2n+1) z)
    theta_3(z) = 1 + 2 sum_{n>=1} q^{n^2} cos(2 n z)
    theta_4(z) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2 n z)

which is the convention of ``mpmath.jtheta``. Two backends share the same
cutoff policy: a numpy backend for double precision (real or complex
arguments, scalars or arrays) and an mpmath backend that is selected
whenever the argument or the nome is an mpmath number and works at the
active ``mpmath.workprec``.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Optional, Union

import mpmath
import numpy as np
from mpmath import mpc, mpf

from sixvertex.core.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

MAX_TERMS = 4096

Real = Union[float, mpf]


@dataclass(frozen=True)
class Nome:
    """Elliptic nome q = exp(i pi tau) with 0 < q < 1.

    ``q`` may be a float or an mpf; an mpf nome routes evaluation through
    the arbitrary precision backend.
    """

    q: Any

    def __post_init__(self) -> None:
        if not (0 < self.q < 1):
            raise DomainError(f"Nome must satisfy 0 < q < 1, got q={self.q}")

    @classmethod
    def from_gamma(cls, gamma: Real, big: bool = False) -> "Nome":
        """Nome q = exp(-pi^2 / (2 gamma)) of the antiferroelectric model."""
        if gamma <= 0:
            raise DomainError(f"gamma must be positive, got {gamma}")
        if big or isinstance(gamma, mpf):
            return cls(mpmath.exp(-mpmath.pi**2 / (2 * mpf(gamma))))
        return cls(math.exp(-math.pi**2 / (2.0 * gamma)))

    @classmethod
    def coerce(cls, nome: Any) -> "Nome":
        return nome if isinstance(nome, Nome) else cls(nome)

    @property
    def is_big(self) -> bool:
        return isinstance(self.q, mpf)

    @property
    def tau(self) -> complex:
        """Half-period ratio, purely imaginary: tau = i (-ln q) / pi."""
        if self.is_big:
            return mpc(0, -mpmath.log(self.q) / mpmath.pi)
        return complex(0.0, -math.log(self.q) / math.pi)

    def big(self) -> "Nome":
        """The same nome as an mpf at the current working precision."""
        return self if self.is_big else Nome(mpf(self.q))


@dataclass(frozen=True)
class ThetaValue:
    """theta_j and its first two z-derivatives at one argument."""

    value: Any
    derivative1: Any
    derivative2: Any


def _check_index(j: int) -> None:
    if j not in (1, 2, 3, 4):
        raise DomainError(f"Theta index must be 1, 2, 3 or 4, got {j}")


def _uses_mpmath(z: Any, q: Any) -> bool:
    return isinstance(z, (mpf, mpc)) or isinstance(q, mpf)


# d^k/dx^k of sin and cos as (function, sign) for k mod 4
_SIN_CYCLE = (("sin", 1), ("cos", 1), ("sin", -1), ("cos", -1))
_COS_CYCLE = (("cos", 1), ("sin", -1), ("cos", -1), ("sin", 1))


def _series_shape(j: int, n: int):
    """(frequency, exponent of q, alternating sign) of the n-th term."""
    if j in (1, 2):
        freq = 2 * n + 1
        expo = (n + 0.5) ** 2
        sign = -1 if (j == 1 and n % 2) else 1
    else:
        freq = 2 * n
        expo = n * n
        sign = -1 if (j == 4 and n % 2) else 1
    return freq, expo, sign


def _term_count(j: int, log_q: float, order: int, imag_bound: float, eps: float, terms: Optional[int]) -> int:
    """Number of series terms needed for the requested accuracy.

    Stops at the first index n >= 3 whose term bound falls below eps times
    the leading term bound; the bound includes the growth exp(freq |Im z|)
    of trigonometric functions off the real axis.
    """
    if terms is not None:
        if terms < 1:
            raise DomainError(f"Number of series terms must be positive, got {terms}")
        return int(terms)
    first = 0 if j in (1, 2) else 1
    leading = None
    for n in range(first, first + MAX_TERMS):
        freq, expo, _ = _series_shape(j, n)
        log_bound = math.log(2.0) + expo * log_q + freq * imag_bound
        if order:
            log_bound += order * math.log(freq)
        if leading is None:
            leading = log_bound if not (j in (3, 4) and order == 0) else max(log_bound, 0.0)
        if n - first >= 3 and log_bound < math.log(eps) + leading:
            return n - first
    raise ConvergenceError(f"theta_{j} series did not converge within {MAX_TERMS} terms (q=exp({log_q}))")


def _reduce(z: Any, lib: Any):
    """Split z = z0 + m pi with Re z0 in [-pi/2, pi/2]."""
    pi = lib.pi
    if lib is np:
        m = np.rint(np.real(z) / pi)
        return z - m * pi, m
    m = mpmath.nint(mpmath.re(z) / pi)
    return z - m * pi, int(m)


def _double_series(j: int, z: Any, q: float, order: int, terms: Optional[int]) -> Any:
    z_arr = np.asarray(z)
    complex_arg = np.iscomplexobj(z_arr)
    z_arr = z_arr.astype(complex if complex_arg else float)
    z0, m = _reduce(z_arr, np)
    imag_bound = float(np.max(np.abs(np.imag(z0)))) if complex_arg and z0.size else 0.0
    eps = np.finfo(float).eps
    log_q = math.log(q)
    count = _term_count(j, log_q, order, imag_bound, eps, terms)

    first = 0 if j in (1, 2) else 1
    n = np.arange(first, first + count)
    if j in (1, 2):
        freq = 2 * n + 1
        expo = (n + 0.5) ** 2
    else:
        freq = 2 * n
        expo = n.astype(float) ** 2
    sign = np.where((n % 2 == 1) & (j in (1, 4)), -1.0, 1.0)
    coef = 2.0 * sign * np.exp(expo * log_q) * freq.astype(float) ** order

    cycle = _SIN_CYCLE if j == 1 else _COS_CYCLE
    name, trig_sign = cycle[order % 4]
    phase = np.multiply.outer(z0, freq)
    trig = np.sin(phase) if name == "sin" else np.cos(phase)
    total = trig_sign * np.tensordot(trig, coef, axes=([-1], [0]))
    if j in (3, 4) and order == 0:
        total = total + 1.0
    if j in (1, 2):
        total = np.where(np.mod(m, 2) == 1, -total, total)
    if not np.all(np.isfinite(total)):
        raise ConvergenceError(f"theta_{j} evaluation produced non-finite values")
    if np.ndim(total) == 0:
        return complex(total) if complex_arg else float(total)
    return total


def _big_series(j: int, z: Any, q: Any, order: int, terms: Optional[int]) -> Any:
    q = mpf(q)
    z = mpmath.mpmathify(z)
    z0, m = _reduce(z, mpmath)
    imag_bound = float(abs(mpmath.im(z0)))
    log_q = mpmath.log(q)
    count = _term_count(j, float(log_q), order, imag_bound, float(mpmath.eps), terms)

    first = 0 if j in (1, 2) else 1
    cycle = _SIN_CYCLE if j == 1 else _COS_CYCLE
    name, trig_sign = cycle[order % 4]
    trig = mpmath.sin if name == "sin" else mpmath.cos
    parts = []
    for n in range(first, first + count):
        freq, _, sign = _series_shape(j, n)
        expo = (mpf(2 * n + 1) / 2) ** 2 if j in (1, 2) else mpf(n * n)
        coef = 2 * sign * mpmath.exp(expo * log_q) * mpf(freq) ** order
        parts.append(coef * trig(freq * z0))
    total = trig_sign * mpmath.fsum(parts)
    if j in (3, 4) and order == 0:
        total += 1
    if j in (1, 2) and m % 2:
        total = -total
    if mpmath.isnan(total):
        raise ConvergenceError(f"theta_{j} evaluation produced NaN")
    return total


def _evaluate(j: int, z: Any, nome: Any, order: int, terms: Optional[int]) -> Any:
    _check_index(j)
    q = Nome.coerce(nome).q
    if _uses_mpmath(z, q):
        return _big_series(j, z, q, order, terms)
    return _double_series(j, z, float(q), order, terms)


def theta(j: int, z: Any, nome: Any, terms: Optional[int] = None) -> Any:
    """Evaluate theta_j(z) with the given nome.

    Args:
        j: Theta index, 1 to 4.
        z: Argument in radians. Float, complex, numpy array or mpmath number.
        nome: A Nome or a raw q in (0, 1).
        terms: Fixed number of series terms; None selects the adaptive cutoff.

    Returns:
        theta_j(z), of the backend's type.

    Raises:
        DomainError: For an invalid index or nome.
        ConvergenceError: If the series cannot be summed.
    """
    return _evaluate(j, z, nome, 0, terms)


def theta_deriv(j: int, z: Any, nome: Any, order: int = 1) -> Any:
    """Evaluate the first or second z-derivative of theta_j by term-wise differentiation."""
    if order not in (1, 2):
        raise DomainError(f"Derivative order must be 1 or 2, got {order}")
    return _evaluate(j, z, nome, order, None)


def theta_values(j: int, z: Any, nome: Any) -> ThetaValue:
    """theta_j(z) with its first and second derivatives."""
    return ThetaValue(
        value=_evaluate(j, z, nome, 0, None),
        derivative1=_evaluate(j, z, nome, 1, None),
        derivative2=_evaluate(j, z, nome, 2, None),
    )


class ThetaEvaluator:
    """Theta functions bound to one nome, with the theta constants cached.

    ``th(j, z, order)`` evaluates theta_j^{(order)}(z). The constants
    theta_j(0) for j = 2, 3, 4 are available as ``th.a2``, ``th.a3``,
    ``th.a4`` and theta_1'(0) as ``th.theta1_prime0``.
    """

    def __init__(self, nome: Any):
        self.nome = Nome.coerce(nome)
        zero = mpf(0) if self.nome.is_big else 0.0
        self.a2 = _evaluate(2, zero, self.nome, 0, None)
        self.a3 = _evaluate(3, zero, self.nome, 0, None)
        self.a4 = _evaluate(4, zero, self.nome, 0, None)
        self.theta1_prime0 = _evaluate(1, zero, self.nome, 1, None)

    @property
    def q(self) -> Any:
        return self.nome.q

    def constant(self, j: int) -> Any:
        """theta_j(0)."""
        _check_index(j)
        return {1: 0 * self.a2, 2: self.a2, 3: self.a3, 4: self.a4}[j]

    def __call__(self, j: int, z: Any, order: int = 0) -> Any:
        return _evaluate(j, z, self.nome, order, None)

    def log_derivative(self, j: int, z: Any) -> Any:
        """theta_j'(z) / theta_j(z)."""
        return self(j, z, 1) / self(j, z)
