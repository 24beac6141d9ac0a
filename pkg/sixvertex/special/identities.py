"""
Theta function identity suite

Each identity is evaluated in denominator-cleared form: both sides are
multiplied through by the denominators of the rational form it is used in
elsewhere in the package, and each side is kept as a tuple of product
terms built from theta_j(z), its derivatives and the theta constants.
``identity_residual`` evaluates |LHS - RHS| / max(1, sum of |terms|), so
cancellation near a zero of a denominator costs no accuracy. Evaluation is
in double precision and accepts numpy arrays for z and y.

Tags Q7, Q8 and Q9 are the residue-cancellation sums of the first-order
correction; y plays the role of omega and the exact value is zero.
"""

import logging
import math
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from sixvertex.core.errors import DomainError, PoleError
from sixvertex.special.theta import Nome, ThetaEvaluator

logger = logging.getLogger(__name__)

POLE_TOLERANCE = 2.0**-40

Terms = Tuple[Any, ...]
Sides = Tuple[Terms, Tuple[Terms, ...]]


class _Frame:
    """Lazily evaluated theta_j^{(k)}(z) for one argument and nome."""

    def __init__(self, th: ThetaEvaluator, z: Any):
        self.th = th
        self.z = z
        self._cache: Dict[Tuple[int, int], Any] = {}

    def _get(self, j: int, order: int) -> Any:
        key = (j, order)
        if key not in self._cache:
            self._cache[key] = self.th(j, self.z, order)
        return self._cache[key]

    def t(self, j: int) -> Any:
        return self._get(j, 0)

    def d(self, j: int) -> Any:
        return self._get(j, 1)

    def s(self, j: int) -> Any:
        return self._get(j, 2)


def _check_pole(*denominators: Any) -> None:
    for den in denominators:
        if np.min(np.abs(den)) < POLE_TOLERANCE:
            raise PoleError("Argument lies on a pole of the identity's rational form")


def _theta1_prime_zero(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
    return (th.theta1_prime0,), ((th.a2 * th.a3 * th.a4,),)


def _first_derivative_via_theta1(j: int, k: int, m: int, c: int) -> Callable[[ThetaEvaluator, _Frame, Any], Sides]:
    # theta_j' theta_1 = theta_1' theta_j - theta_c(0)^2 theta_k theta_m
    def identity(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
        _check_pole(f.t(1))
        a = th.constant(c)
        return (f.d(j) * f.t(1),), ((f.d(1) * f.t(j), -a * a * f.t(k) * f.t(m)),)

    return identity


def _first_derivative_via_theta2(j: int, k: int, m: int, c: int) -> Callable[[ThetaEvaluator, _Frame, Any], Sides]:
    # theta_j' theta_2 = theta_2' theta_j + theta_c(0)^2 theta_k theta_m
    def identity(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
        _check_pole(f.t(2))
        a = th.constant(c)
        return (f.d(j) * f.t(2),), ((f.d(2) * f.t(j), a * a * f.t(k) * f.t(m)),)

    return identity


def _second_derivative(
    j: int, base: int, sign: int, c: int, k: int, m: int, u: int, cu: int, v: int, cv: int
) -> Callable[[ThetaEvaluator, _Frame, Any], Sides]:
    """theta_j'' expressed through theta_base'' and theta_base'.

    theta_j'' theta_base^2 = theta_base'' theta_j theta_base
                             + 2 sign theta_base' a_c^2 theta_k theta_m
                             + a_c^2 theta_j (a_cu^2 theta_u^2 + a_cv^2 theta_v^2)
    """

    def identity(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
        tb = f.t(base)
        _check_pole(tb)
        ac2 = th.constant(c) ** 2
        rhs = (
            f.s(base) * f.t(j) * tb,
            2.0 * sign * f.d(base) * ac2 * f.t(k) * f.t(m),
            ac2 * th.constant(cu) ** 2 * f.t(j) * f.t(u) ** 2,
            ac2 * th.constant(cv) ** 2 * f.t(j) * f.t(v) ** 2,
        )
        return (f.s(j) * tb * tb,), (rhs,)

    return identity


def _theta1_duplication(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
    lhs = th(1, 2 * f.z) * th.a2 * th.a3 * th.a4
    return (lhs,), ((2.0 * f.t(1) * f.t(2) * f.t(3) * f.t(4),),)


def _theta3_duplication(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
    lhs = th(3, 2 * f.z) * th.a3 * th.a2**2
    return (lhs,), ((f.t(1) ** 2 * f.t(4) ** 2, f.t(2) ** 2 * f.t(3) ** 2),)


def _theta4_duplication(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
    lhs = th(4, 2 * f.z) * th.a4**3
    return (lhs,), ((f.t(3) ** 4, -f.t(2) ** 4), (f.t(4) ** 4, -f.t(1) ** 4))


def _theta3_addition(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
    z = f.z
    lhs = th(3, y + z) * th(3, y - z) * th.a2**2
    rhs1 = (th(3, y) ** 2 * f.t(2) ** 2, th(4, y) ** 2 * f.t(1) ** 2)
    rhs2 = (th(1, y) ** 2 * f.t(4) ** 2, th(2, y) ** 2 * f.t(3) ** 2)
    return (lhs,), (rhs1, rhs2)


def _square_relation(j: int, p: int, cp: int, m: int, cm: int) -> Callable[[ThetaEvaluator, _Frame, Any], Sides]:
    # theta_j^2 theta_4(0)^2 = theta_p^2 a_cp^2 - theta_m^2 a_cm^2
    def identity(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
        lhs = f.t(j) ** 2 * th.a4**2
        return (lhs,), ((f.t(p) ** 2 * th.constant(cp) ** 2, -f.t(m) ** 2 * th.constant(cm) ** 2),)

    return identity


def _log_duplication(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
    # 2 theta_1'(2z) prod_j theta_j = theta_1(2z) sum_j theta_j' prod_{i != j} theta_i
    z2 = 2 * f.z
    t2z = th(1, z2)
    values = [f.t(j) for j in (1, 2, 3, 4)]
    _check_pole(t2z, *values)
    product = values[0] * values[1] * values[2] * values[3]
    rhs = []
    for j in (1, 2, 3, 4):
        others = [values[i - 1] for i in (1, 2, 3, 4) if i != j]
        rhs.append(t2z * f.d(j) * others[0] * others[1] * others[2])
    return (2.0 * th(1, z2, 1) * product,), (tuple(rhs),)


def _residue(index: int) -> Callable[[ThetaEvaluator, _Frame, Any], Sides]:
    def identity(th: ThetaEvaluator, f: _Frame, y: Any) -> Sides:
        from sixvertex.asymptotics.subleading import residue_terms

        return tuple(residue_terms(f.z, y, th.nome)[index]), ((0.0,),)

    return identity


# Registry of available identities
IDENTITIES: Dict[str, Callable[[ThetaEvaluator, _Frame, Any], Sides]] = {
    "main13a": _theta1_prime_zero,
    "4a": _first_derivative_via_theta1(4, 2, 3, 4),
    "4b": _first_derivative_via_theta1(2, 3, 4, 2),
    "4c": _first_derivative_via_theta1(3, 2, 4, 3),
    "evf3a": _first_derivative_via_theta2(4, 1, 3, 3),
    "evf3b": _first_derivative_via_theta2(1, 3, 4, 2),
    "evf3c": _first_derivative_via_theta2(3, 1, 4, 4),
    "evf2a": _second_derivative(4, 2, 1, 3, 1, 3, 3, 2, 1, 4),
    "evf2b": _second_derivative(1, 2, 1, 2, 3, 4, 3, 3, 4, 4),
    "evf2c": _second_derivative(3, 2, 1, 4, 1, 4, 4, 2, 1, 3),
    "Q23a": _second_derivative(4, 1, -1, 4, 2, 3, 3, 2, 2, 3),
    "Q23b": _second_derivative(2, 1, -1, 2, 3, 4, 4, 3, 3, 4),
    "Q23c": _second_derivative(3, 1, -1, 3, 2, 4, 4, 2, 2, 4),
    "2": _theta1_duplication,
    "me4": _theta3_duplication,
    "Q26": _theta4_duplication,
    "Q11": _theta3_addition,
    "evf6a": _square_relation(1, 3, 2, 2, 3),
    "evf6b": _square_relation(2, 4, 2, 1, 3),
    "evf6c": _square_relation(3, 4, 3, 1, 2),
    "evf6d": _square_relation(4, 3, 3, 2, 2),
    "8": _log_duplication,
    "Q7": _residue(0),
    "Q8": _residue(1),
    "Q9": _residue(2),
}

# Tags whose second argument is the angle omega in (0, pi)
OMEGA_TAGS = ("Q7", "Q8", "Q9")


def _magnitude(terms: Terms) -> Any:
    return sum(np.abs(term) for term in terms)


def list_identities() -> List[str]:
    """Return the tags of all identities in the suite."""
    return list(IDENTITIES.keys())


def get_identity(tag: str) -> Optional[Callable[[ThetaEvaluator, _Frame, Any], Sides]]:
    """Get an identity by tag, or None if unknown."""
    return IDENTITIES.get(tag)


def identity_residual(tag: str, z: Any, y: Any, nome: Any) -> Any:
    """Evaluate the term-scaled residual of a named identity.

    Args:
        tag: Identity tag, see ``list_identities()``.
        z: Argument (float or numpy array).
        y: Second argument; used by Q11, and as omega by Q7, Q8, Q9.
        nome: A Nome or a raw q in (0, 1).

    Returns:
        max over right-hand forms of |LHS - RHS| / max(1, sum of |terms|)
        in the denominator-cleared form, with the shape of z.

    Raises:
        DomainError: If the tag is unknown.
        PoleError: If z is on a pole of the rational form.
    """
    identity = get_identity(tag)
    if identity is None:
        valid = ", ".join(IDENTITIES.keys())
        raise DomainError(f"Unknown identity '{tag}'. Valid tags: {valid}")
    th = ThetaEvaluator(Nome(float(Nome.coerce(nome).q)))
    frame = _Frame(th, z)
    lhs_terms, rhs_forms = identity(th, frame, y)
    lhs = sum(lhs_terms)
    residual = None
    for rhs_terms in rhs_forms:
        scale = np.maximum(1.0, _magnitude(lhs_terms) + _magnitude(rhs_terms))
        value = np.abs(lhs - sum(rhs_terms)) / scale
        residual = value if residual is None else np.maximum(residual, value)
    if np.ndim(residual) == 0:
        return float(residual)
    return residual


def identity_sweep(
    tag: str,
    trials: int,
    seed: int,
    q_range: Tuple[float, float] = (0.05, 0.5),
    batches: int = 20,
) -> float:
    """Maximum residual of one identity over seeded random (z, y, q) draws.

    The draws are grouped into ``batches`` nomes with the arguments of each
    batch evaluated as one numpy array. z is uniform in [-pi, pi]; y is
    uniform in [-pi, pi], or in [0.2, pi - 0.2] when it plays the role of
    omega.
    """
    rng = np.random.default_rng(seed)
    batches = max(1, min(batches, trials))
    sizes = [trials // batches + (1 if i < trials % batches else 0) for i in range(batches)]
    worst = 0.0
    for size in sizes:
        if size == 0:
            continue
        q = rng.uniform(*q_range)
        z = rng.uniform(-math.pi, math.pi, size)
        if tag in OMEGA_TAGS:
            y = rng.uniform(0.2, math.pi - 0.2, size)
            residuals = [identity_residual(tag, zi, yi, q) for zi, yi in zip(z, y)]
            batch_worst = max(residuals)
        else:
            y = rng.uniform(-math.pi, math.pi, size)
            batch_worst = float(np.max(identity_residual(tag, z, y, q)))
        worst = max(worst, batch_worst)
    logger.debug(f"Identity {tag}: max residual {worst:.3e} over {trials} draws")
    return worst
