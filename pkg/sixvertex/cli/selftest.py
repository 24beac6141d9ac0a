"""
Reduced acceptance suite

Runs one fast slice of every cross-check and raises ToleranceError on the
first failure. The full-range sweeps live in the test suite.
"""

import logging
from typing import Any, Dict, List, Tuple

import mpmath
import numpy as np

from sixvertex.asymptotics.constants import m1_entries
from sixvertex.asymptotics.subleading import f_value_sweep
from sixvertex.cli.config import RunConfig
from sixvertex.core.bigreal import relative_difference
from sixvertex.core.errors import ToleranceError
from sixvertex.core.params import ModelParams
from sixvertex.equilibrium.elliptic_layer import elliptic_consistency
from sixvertex.equilibrium.measure import EquilibriumMeasure
from sixvertex.routes.enumerate import brute_force_Z
from sixvertex.routes.exact import partition_exact
from sixvertex.special.identities import OMEGA_TAGS, identity_sweep, list_identities

logger = logging.getLogger(__name__)

ORACLE_BITS = 512
ORACLE_TOLERANCE = 1e-40
IDENTITY_TOLERANCE = 1e-12
RESIDUE_TOLERANCE = 1e-11
MASS_TOLERANCE = 1e-8
CONSISTENCY_TOLERANCE = 1e-8
F_TOLERANCE = 1e-10
M1_TOLERANCE = 1e-10
LADDER_START_BITS = 64
LADDER_SIZE = 12


def _check(results: Dict[str, Any], name: str, value: float, tolerance: float) -> None:
    results[name] = {"value": value, "tolerance": tolerance}
    if not value <= tolerance:
        raise ToleranceError(name, value, tolerance)
    logger.info(f"Selftest {name}: {value:.3e} <= {tolerance:.3e}")


def _random_params(rng: np.random.Generator, count: int) -> List[ModelParams]:
    draws = []
    for _ in range(count):
        gamma = rng.uniform(0.3, 2.5)
        draws.append(ModelParams(gamma, rng.uniform(-0.9, 0.9) * gamma))
    return draws


def identity_tolerances(config: RunConfig) -> Tuple[float, float]:
    """Tolerances of the theta identity and residue checks.

    ``--tolerance`` sets the identity tolerance; the residue tolerance keeps
    its default ratio to it.
    """
    identity = config.tolerance or IDENTITY_TOLERANCE
    return identity, identity * (RESIDUE_TOLERANCE / IDENTITY_TOLERANCE)


def run_selftest(config: RunConfig) -> Dict[str, Any]:
    """Run every check and return the measured deviations.

    Raises:
        ToleranceError: On the first check that exceeds its tolerance.
    """
    rng = np.random.default_rng(config.seed)
    results: Dict[str, Any] = {}

    worst = mpmath.mpf(0)
    for params in [ModelParams(1.0, 0.0)] + _random_params(rng, 3):
        for n in range(1, 5):
            exact = partition_exact(params, n, ORACLE_BITS).Z_n
            with mpmath.workprec(ORACLE_BITS):
                worst = max(worst, relative_difference(exact, brute_force_Z(params, n, ORACLE_BITS)))
    _check(results, "oracle_equivalence", float(worst), ORACLE_TOLERANCE)

    trials = min(config.trials, 200)
    identity_tolerance, residue_tolerance = identity_tolerances(config)
    identity_worst = max(identity_sweep(tag, trials, config.seed) for tag in list_identities() if tag not in OMEGA_TAGS)
    _check(results, "theta_identities", identity_worst, identity_tolerance)
    residue_worst = max(identity_sweep(tag, trials, config.seed) for tag in OMEGA_TAGS)
    _check(results, "residue_identities", residue_worst, residue_tolerance)

    params = ModelParams(config.gamma, config.t)
    eq = EquilibriumMeasure(params)
    e = eq.endpoints
    _check(results, "total_mass", abs(eq.mass(e.alpha, e.beta) - 1.0), MASS_TOLERANCE)
    _check(results, "right_mass", abs(eq.mass(0.0, e.beta) - 0.5 * (1.0 + params.zeta)), MASS_TOLERANCE)
    _check(results, "elliptic_consistency", elliptic_consistency(params).max_residual, CONSISTENCY_TOLERANCE)
    # five interior points on each band, where the residual vanishes
    support = np.concatenate([np.linspace(e.alpha, e.alpha_p, 7)[1:-1], np.linspace(e.beta_p, e.beta, 7)[1:-1]])
    variational = max(abs(eq.variational_residual(float(x))) for x in support)
    _check(results, "variational", variational, config.variational_tolerance)

    sweep = f_value_sweep((0.5, 1.0, 2.0), (-0.5, 0.0, 0.5), range(1, 5))
    _check(results, "f_one_sixth", max(sweep["max_dev"], sweep["max_step"]), F_TOLERANCE)

    m1_worst = 0.0
    for params_draw in _random_params(rng, 10):
        n = int(rng.integers(1, 20))
        m1_worst = max(m1_worst, m1_entries(params_draw, n).max_deviation)
    _check(results, "m1_equivalence", m1_worst, M1_TOLERANCE)

    ladder = partition_exact(ModelParams(1.0, 0.3), LADDER_SIZE, 128, start_bits=LADDER_START_BITS)
    _check(results, "precision_ladder", float(ladder.est_rel_err), float(mpmath.ldexp(1, -128 + 16)))
    results["precision_ladder"]["attempts"] = ladder.attempts

    logger.info(f"Selftest passed {len(results)} checks")
    return {"passed": True, "checks": results}
