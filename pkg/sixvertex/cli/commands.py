"""
Subcommand handlers

Each handler takes a validated RunConfig and returns a CommandResult: a
JSON-ready object plus, for tabular commands, the rows written in CSV mode.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import mpmath

from sixvertex.asymptotics.constants import (
    constants,
    convergence_table,
    estimate_C,
    first_order_coefficients,
    log_h_ratio_asym,
    z_asym,
)
from sixvertex.asymptotics.subleading import correction_term, residue_identities
from sixvertex.cli.config import RunConfig
from sixvertex.core.params import ModelParams
from sixvertex.equilibrium.elliptic_layer import elliptic_consistency
from sixvertex.equilibrium.endpoints import centroid_formula, endpoint_differences, endpoints
from sixvertex.equilibrium.measure import EquilibriumMeasure, lagrange_multiplier
from sixvertex.routes.enumerate import brute_force_Z, count_configs, dump_configs
from sixvertex.routes.exact import partition_exact, toda_residual
from sixvertex.special.identities import OMEGA_TAGS, identity_sweep, list_identities
from sixvertex.utils.serialization import format_big

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Output of one subcommand."""

    data: Dict[str, Any]
    rows: Optional[List[Dict[str, Any]]] = None
    columns: Optional[Sequence[str]] = None
    lines: List[str] = field(default_factory=list)


def _params(config: RunConfig) -> ModelParams:
    return ModelParams(config.gamma, config.t)


def _sizes(config: RunConfig) -> List[int]:
    return list(range(config.n_min, config.n_max + 1))


def params_command(config: RunConfig) -> CommandResult:
    params = _params(config)
    k = constants(params)
    data = params.as_dict()
    data.update({"F": k.F, "G": k.G, "A": k.A, "l": k.l})
    return CommandResult(data)


def endpoints_command(config: RunConfig) -> CommandResult:
    params = _params(config)
    e = endpoints(params)
    data = {"gamma": params.gamma, "t": params.t, **e.as_dict()}
    data["gaps"] = endpoint_differences(params)
    data["centroid_formula"] = centroid_formula(params)
    data["lagrange_multiplier"] = lagrange_multiplier(params)
    return CommandResult(data)


def density_command(config: RunConfig) -> CommandResult:
    params = _params(config)
    eq = EquilibriumMeasure(params)
    rows = [{"x": x, "rho": rho} for x, rho in eq.sample_density(config.samples)]
    e = eq.endpoints
    consistency = elliptic_consistency(params)
    data = {
        "gamma": params.gamma,
        "t": params.t,
        "mass": eq.mass(e.alpha, e.beta),
        "right_mass": eq.mass(0.0, e.beta),
        "consistency": consistency.as_dict(),
        "samples": rows,
    }
    return CommandResult(data, rows=rows, columns=("x", "rho"))


def exact_command(config: RunConfig) -> CommandResult:
    params = _params(config)
    solution = partition_exact(params, config.n, config.precision_bits, config.start_bits)
    data = {"gamma": params.gamma, "t": params.t, **solution.to_dict()}
    return CommandResult(data)


def brute_command(config: RunConfig) -> CommandResult:
    params = _params(config)
    Z = brute_force_Z(params, config.n, config.precision_bits)
    data = {
        "gamma": params.gamma,
        "t": params.t,
        "n": config.n,
        "count": count_configs(config.n),
        "Z": format_big(Z, config.precision_bits),
    }
    return CommandResult(data, lines=dump_configs(config.n) if config.dump else [])


def asym_command(config: RunConfig) -> CommandResult:
    params = _params(config)
    k = constants(params)
    data: Dict[str, Any] = {"gamma": params.gamma, "t": params.t, "n": config.n, **k.as_dict()}
    data.pop("params")
    C = config.C
    if C is None:
        estimate = estimate_C(params, _sizes(config), config.precision_bits)
        C = estimate.final
        data["C_increments"] = list(estimate.increments)
    data["C"] = C
    data["Z_asym_log"] = z_asym(params, config.n, C)
    data["h_ratio_asym_log"] = log_h_ratio_asym(params, config.n)
    coefficients = first_order_coefficients(params, config.n)
    data["c1"] = coefficients.c1
    data["f0"] = coefficients.f0
    return CommandResult(data)


def compare_command(config: RunConfig) -> CommandResult:
    params = _params(config)
    rows, summary = convergence_table(params, _sizes(config), config.precision_bits)
    logger.info(f"Convergence summary: {summary}")
    data = {"gamma": params.gamma, "t": params.t, "rows": rows, "summary": summary}
    return CommandResult(data, rows=rows, columns=("n", "Z_exact_log", "Z_asym_log", "r_n", "n2_dev"))


def toda_command(config: RunConfig) -> CommandResult:
    params = _params(config)
    threshold = mpmath.ldexp(1, -config.precision_bits // 2)
    rows = []
    for n in _sizes(config):
        residual = toda_residual(params, n, config.precision_bits)
        rows.append({"n": n, "residual": format_big(residual, 53), "within_bound": bool(residual <= threshold)})
    data = {"gamma": params.gamma, "t": params.t, "precision_bits": config.precision_bits, "rows": rows}
    return CommandResult(data, rows=rows, columns=("n", "residual", "within_bound"))


def identities_command(config: RunConfig) -> CommandResult:
    residuals = {tag: identity_sweep(tag, config.trials, config.seed) for tag in list_identities()}
    rows = [{"tag": tag, "max_residual": value, "omega_tag": tag in OMEGA_TAGS} for tag, value in residuals.items()]
    data = {
        "trials": config.trials,
        "seed": config.seed,
        "residuals": residuals,
        "max_residual": max(residuals.values()),
    }
    return CommandResult(data, rows=rows, columns=("tag", "max_residual", "omega_tag"))


def subleading_command(config: RunConfig) -> CommandResult:
    params = _params(config)
    term = correction_term(params, config.n)
    z = (config.n + 0.5) * params.omega
    data = {
        "gamma": params.gamma,
        "t": params.t,
        "n": config.n,
        "f_value": term.f_value,
        "dev_from_one_sixth": abs(term.f_value - 1.0 / 6.0),
        "residues": list(residue_identities(params, z)),
        "X": {
            "alpha": term.X_alpha,
            "alpha_p": term.X_alpha_p,
            "beta_p": term.X_beta_p,
            "beta": term.X_beta,
        },
        "x_real_part": term.x_real_part,
    }
    return CommandResult(data)


def selftest_command(config: RunConfig) -> CommandResult:
    from sixvertex.cli.selftest import run_selftest

    return CommandResult(run_selftest(config))


# Registry of available subcommands
COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "params": params_command,
    "endpoints": endpoints_command,
    "density": density_command,
    "exact": exact_command,
    "brute": brute_command,
    "asym": asym_command,
    "compare": compare_command,
    "toda": toda_command,
    "identities": identities_command,
    "subleading": subleading_command,
    "selftest": selftest_command,
}


def list_commands() -> List[str]:
    """Return a list of available subcommand names."""
    return list(COMMANDS.keys())


def run_command(name: str, config: RunConfig) -> CommandResult:
    """Run one subcommand by name.

    Raises:
        ValueError: If the subcommand is unknown.
    """
    handler = COMMANDS.get(name.lower())
    if handler is None:
        raise ValueError(f"Unknown command: {name}. Valid commands: {', '.join(COMMANDS)}")
    logger.info(f"Running {name} with gamma={config.gamma}, t={config.t}")
    return handler(config)
