"""
First-order correction to the h-ratio asymptotics

The 1/n correction of h_n/(n!)^2 is governed by the sum of four turning
point contributions X = X_alpha + X_alpha' + X_beta' + X_beta and

    f(n omega, omega) = X theta_4(n omega) / (A theta_4((n+1) omega)),

which equals 1/6 for every n, gamma and t. Each contribution is built
from theta functions at z = n omega + omega/2 (index a of the table below)
and at omega/2 (index b):

    point    a  b  s_xi  s_eta  D
    alpha    4  3   +     +     beta' - alpha
    alpha'   1  2   -     -     beta - alpha'
    beta'    2  1   +     -     beta' - alpha
    beta     3  4   -     +     beta - alpha'

Regrouping by powers of theta_a gives f = f~(n omega + omega/2) with
f~(z) = sum_jk Q_jk h_jk(z) and h_jk = [theta_a^2, theta_a' theta_a,
theta_a'^2, theta_a'' theta_a](z) / (theta_4(z - omega/2) theta_4(z + omega/2)).
f~ is constant in z; three partial sums of it vanish identically and are
exposed as residue_sums.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from sixvertex.core.params import ModelParams
from sixvertex.equilibrium.endpoints import gaps_from_theta
from sixvertex.special.theta import Nome, ThetaEvaluator

logger = logging.getLogger(__name__)

POINTS = ("alpha", "alpha_p", "beta_p", "beta")

# point -> (a, b, s_xi, s_eta, gap key of D)
_ROW_SPECS = {
    "alpha": (4, 3, 1, 1, "beta_p-alpha"),
    "alpha_p": (1, 2, -1, -1, "beta-alpha_p"),
    "beta_p": (2, 1, 1, -1, "beta_p-alpha"),
    "beta": (3, 4, -1, 1, "beta-alpha_p"),
}


@dataclass(frozen=True)
class TurningPointRow:
    """Per turning point data that does not depend on n."""

    point: str
    a: int
    b: int
    s_xi: int
    s_eta: int
    D: float
    C: float
    theta_b: float
    log_deriv_b: float
    second_ratio_b: float


@dataclass(frozen=True)
class SubleadingConstants:
    Xi: Dict[str, float]
    xi: Dict[str, float]
    eta: Dict[str, float]
    Cc: Dict[str, float]
    Aa: Dict[str, float]
    Bb: Dict[str, float]


@dataclass(frozen=True)
class CorrectionTerm:
    """Turning point contributions (coefficients of i) and the resulting f."""

    X_alpha: float
    X_alpha_p: float
    X_beta_p: float
    X_beta: float
    f_value: float
    x_real_part: float

    @property
    def X(self) -> float:
        return self.X_alpha + self.X_alpha_p + self.X_beta_p + self.X_beta


def c_constants(gaps: Dict[str, float]) -> Dict[str, float]:
    """The four C_xi from the endpoint gaps."""
    ap_a = gaps["alpha_p-alpha"]
    bp_a = gaps["beta_p-alpha"]
    b_a = gaps["beta-alpha"]
    b_ap = gaps["beta-alpha_p"]
    bp_ap = gaps["beta_p-alpha_p"]
    b_bp = gaps["beta-beta_p"]
    return {
        "alpha": 3.5 * bp_a + 1.5 * b_a + 1.5 * ap_a - ap_a * b_a / bp_a,
        "alpha_p": -3.5 * b_ap - 1.5 * bp_ap + 1.5 * ap_a - ap_a * bp_ap / b_ap,
        "beta_p": -3.5 * bp_a - 1.5 * bp_ap + 1.5 * b_bp - b_bp * bp_ap / bp_a,
        "beta": 3.5 * b_ap + 1.5 * b_a + 1.5 * b_bp - b_bp * b_a / b_ap,
    }


def turning_point_rows(omega: float, nome: Any, gaps: Optional[Dict[str, float]] = None) -> List[TurningPointRow]:
    th = ThetaEvaluator(Nome.coerce(nome))
    gaps = gaps or gaps_from_theta(omega, nome)
    cs = c_constants(gaps)
    half = 0.5 * omega
    rows = []
    for point in POINTS:
        a, b, s_xi, s_eta, key = _ROW_SPECS[point]
        tb = th(b, half)
        rows.append(
            TurningPointRow(
                point=point,
                a=a,
                b=b,
                s_xi=s_xi,
                s_eta=s_eta,
                D=gaps[key],
                C=cs[point],
                theta_b=tb,
                log_deriv_b=th(b, half, 1) / tb,
                second_ratio_b=th(b, half, 2) / tb,
            )
        )
    return rows


def constants_at(params: ModelParams, n: int) -> SubleadingConstants:
    """Xi, xi, eta, C, A, B for each turning point at z = n omega + omega/2."""
    th = ThetaEvaluator(params.nome)
    omega = params.omega
    z = n * omega + 0.5 * omega
    gaps = gaps_from_theta(omega, params.nome)
    rows = turning_point_rows(omega, params.nome, gaps)
    t4n = th(4, n * omega)

    Xi, xi, eta = {}, {}, {}
    for row in rows:
        ta = th(row.a, z)
        ra1 = th(row.a, z, 1) / ta
        ra2 = th(row.a, z, 2) / ta
        rb1, rb2 = row.log_deriv_b, row.second_ratio_b
        Xi[row.point] = th.a3**2 * ta**2 / (row.theta_b**2 * t4n**2)
        xi[row.point] = row.s_xi * (rb1 - ra1)
        eta[row.point] = row.s_eta * (5 * ra2 - 5 * rb2 + 7 * ra1**2 + 17 * rb1**2 - 24 * ra1 * rb1)

    g = gaps
    Aa = {
        "alpha": math.sqrt(g["alpha_p-alpha"] * g["beta_p-alpha"] * g["beta-alpha"]),
        "alpha_p": math.sqrt(g["alpha_p-alpha"] * g["beta_p-alpha_p"] * g["beta-alpha_p"]),
        "beta_p": math.sqrt(g["beta_p-alpha"] * g["beta_p-alpha_p"] * g["beta-beta_p"]),
        "beta": math.sqrt(g["beta-alpha"] * g["beta-alpha_p"] * g["beta-beta_p"]),
    }
    Bb = {
        "alpha": 1 / g["alpha_p-alpha"] + 1 / g["beta_p-alpha"] + 1 / g["beta-alpha"],
        "alpha_p": -1 / g["alpha_p-alpha"] + 1 / g["beta_p-alpha_p"] + 1 / g["beta-alpha_p"],
        "beta_p": 1 / g["beta_p-alpha"] + 1 / g["beta_p-alpha_p"] - 1 / g["beta-beta_p"],
        "beta": 1 / g["beta-alpha"] + 1 / g["beta-alpha_p"] + 1 / g["beta-beta_p"],
    }
    return SubleadingConstants(Xi=Xi, xi=xi, eta=eta, Cc=c_constants(gaps), Aa=Aa, Bb=Bb)


def _contributions(
    th: ThetaEvaluator, rows: Sequence[TurningPointRow], z: Any, norm: Any
) -> Dict[str, complex]:
    """i Xi_xi (C + 12 pi xi + pi^2 eta / (2 D)) / 96 with theta_4^2(n omega) replaced by norm."""
    pi = math.pi
    contributions: Dict[str, complex] = {}
    for row in rows:
        ta, da, sa = th(row.a, z), th(row.a, z, 1), th(row.a, z, 2)
        rb1, rb2 = row.log_deriv_b, row.second_ratio_b
        # bracket multiplied through by theta_a^2 so that zeros of theta_a are harmless
        bracket = (
            ta * ta * row.C
            + 12 * pi * row.s_xi * (rb1 * ta * ta - da * ta)
            + pi**2
            * row.s_eta
            / (2 * row.D)
            * (5 * sa * ta - 5 * rb2 * ta * ta + 7 * da * da + 17 * rb1**2 * ta * ta - 24 * da * ta * rb1)
        )
        contributions[row.point] = 1j * th.a3**2 / (96 * row.theta_b**2 * norm) * bracket
    return contributions


def _correction(params: ModelParams, n: int) -> CorrectionTerm:
    th = ThetaEvaluator(params.nome)
    omega = params.omega
    rows = turning_point_rows(omega, params.nome)
    z = n * omega + 0.5 * omega
    t4n = th(4, n * omega)
    contributions = _contributions(th, rows, complex(z, 0.0), t4n**2)
    X = sum(contributions.values())
    A = math.pi * th.theta1_prime0 / (2 * th(1, omega))
    f = X * t4n / (1j * A * th(4, (n + 1) * omega))

    # Off the real axis, with theta_4^2(n omega) continued to theta_4(w - omega/2) theta_4(w + omega/2),
    # the sum equals i A f~(w); it stays purely imaginary only while f~ is constant.
    w = complex(z, -0.125 * math.log(float(params.nome.q)))
    shifted = sum(_contributions(th, rows, w, th(4, w - 0.5 * omega) * th(4, w + 0.5 * omega)).values())
    return CorrectionTerm(
        X_alpha=float(np.imag(contributions["alpha"])),
        X_alpha_p=float(np.imag(contributions["alpha_p"])),
        X_beta_p=float(np.imag(contributions["beta_p"])),
        X_beta=float(np.imag(contributions["beta"])),
        f_value=float(np.real(f)),
        x_real_part=float(abs(np.real(shifted))),
    )


def correction_term(params: ModelParams, n: int) -> CorrectionTerm:
    return _correction(params, n)


def f_value(params: ModelParams, n: int) -> float:
    """f(n omega, omega); equals 1/6 for all n, gamma and t."""
    value = _correction(params, n).f_value
    logger.debug(f"f(n omega, omega) at gamma={params.gamma}, t={params.t}, n={n}: {value!r}")
    return value


def q_matrix(omega: float, nome: Any, gaps: Optional[Dict[str, float]] = None) -> np.ndarray:
    """The 4 x 4 coefficients Q_jk of f~, rows in turning point order."""
    th = ThetaEvaluator(Nome.coerce(nome))
    pi = math.pi
    Q = np.zeros((4, 4))
    for j, row in enumerate(turning_point_rows(omega, nome, gaps)):
        P = th(1, omega) * th.a3**2 / (48 * pi * th.theta1_prime0 * row.theta_b**2)
        rb1, rb2 = row.log_deriv_b, row.second_ratio_b
        Q[j, 0] = P * (row.C + 12 * pi * row.s_xi * rb1 + pi**2 * row.s_eta / (2 * row.D) * (-5 * rb2 + 17 * rb1**2))
        Q[j, 1] = -P * (12 * pi * row.s_xi + 12 * pi**2 * row.s_eta * rb1 / row.D)
        Q[j, 2] = P * 7 * pi**2 * row.s_eta / (2 * row.D)
        Q[j, 3] = P * 5 * pi**2 * row.s_eta / (2 * row.D)
    return Q


def q_pair_closed_forms(omega: float, nome: Any) -> np.ndarray:
    """Q_j3 + Q_j4 from theta values at omega/2 alone."""
    th = ThetaEvaluator(Nome.coerce(nome))
    half = 0.5 * omega
    t1, t2, t3, t4 = (th(j, half) for j in (1, 2, 3, 4))
    scale = th(1, omega) / (8 * th.theta1_prime0)
    return np.array(
        [
            scale * t1 / (t2 * t3 * t4),
            -scale * t4 / (t1 * t2 * t3),
            -scale * t3 / (t1 * t2 * t4),
            scale * t2 / (t1 * t3 * t4),
        ]
    )


def h_vector(z: Any, omega: float, nome: Any) -> np.ndarray:
    """h_jk(z) as a 4 x 4 array (4 x 4 x len(z) for array z)."""
    if isinstance(z, (list, tuple)):
        z = np.asarray(z, dtype=float)
    th = ThetaEvaluator(Nome.coerce(nome))
    den = th(4, z - 0.5 * omega) * th(4, z + 0.5 * omega)
    rows = []
    for point in POINTS:
        a = _ROW_SPECS[point][0]
        ta, da, sa = th(a, z), th(a, z, 1), th(a, z, 2)
        rows.append([ta * ta / den, da * ta / den, da * da / den, sa * ta / den])
    return np.array(rows)


def f_tilde(z: Any, omega: float, nome: Any, gaps: Optional[Dict[str, float]] = None) -> Any:
    """sum_jk Q_jk h_jk(z); constant in z and equal to 1/6."""
    Q = q_matrix(omega, nome, gaps)
    h = h_vector(z, omega, nome)
    return np.tensordot(Q, h, axes=([0, 1], [0, 1]))


def residue_terms(z: Any, omega: float, nome: Any) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per turning point terms of the three residue sums, each of shape (4, ...)."""
    Q = q_matrix(omega, nome)
    h = h_vector(z, omega, nome)
    pair = Q[:, 2] + Q[:, 3]
    extra = (1,) * (np.ndim(h) - 2)
    q7 = Q[:, 1].reshape((4,) + extra) * h[:, 0]
    q8 = pair.reshape((4,) + extra) * h[:, 0]
    q9 = pair.reshape((4,) + extra) * h[:, 1]
    return q7, q8, q9


def residue_sums(z: Any, omega: float, nome: Any) -> Tuple[Any, Any, Any]:
    """The three vanishing partial sums of f~:

    sum_j Q_j2 h_j1,  sum_j (Q_j3 + Q_j4) h_j1,  sum_j (Q_j3 + Q_j4) h_j2.
    """
    q7, q8, q9 = residue_terms(z, omega, nome)
    return q7.sum(axis=0), q8.sum(axis=0), q9.sum(axis=0)


def residue_identities(params: ModelParams, z: float) -> Tuple[float, float, float]:
    """Absolute values of the three residue sums at real z."""
    q7, q8, q9 = residue_sums(z, params.omega, params.nome)
    return float(abs(q7)), float(abs(q8)), float(abs(q9))


def f_value_sweep(
    gammas: Sequence[float], t_fractions: Sequence[float], n_values: Sequence[int]
) -> Dict[str, float]:
    """Largest |f - 1/6| and |f(n) - f(n+1)| over a parameter grid.

    t runs over t_fraction * gamma so every grid point is admissible.
    """
    max_dev = 0.0
    max_step = 0.0
    points = 0
    for gamma in gammas:
        for fraction in t_fractions:
            params = ModelParams(gamma, fraction * gamma)
            previous = None
            for n in n_values:
                value = f_value(params, n)
                max_dev = max(max_dev, abs(value - 1.0 / 6.0))
                if previous is not None:
                    max_step = max(max_step, abs(value - previous))
                previous = value
                points += 1
    logger.info(f"f sweep over {points} points: max |f - 1/6| = {max_dev:.3e}")
    return {"points": points, "max_dev": max_dev, "max_step": max_step}
