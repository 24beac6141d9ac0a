"""
Six-vertex model with domain wall boundary conditions

Numerical library for the antiferroelectric phase: the partition function
by exact Hankel determinants, exhaustive enumeration and theta-function
asymptotics, together with the equilibrium measure and the theta and
elliptic function machinery behind them.

Available routes:
- exact (Izergin-Korepin Hankel determinant with a precision ladder)
- brute (exhaustive enumeration, n <= 6)
- asym (leading large-n asymptote)
"""

from sixvertex.core import ModelParams, PartitionRoute, RouteComparator
from sixvertex.routes import ROUTES, get_route, list_routes

__version__ = "0.1.0"

__all__ = [
    "ModelParams",
    "PartitionRoute",
    "RouteComparator",
    "ROUTES",
    "list_routes",
    "get_route",
]


def run_command(name, config=None, **values):
    """
    Run a CLI subcommand without going through argparse.

    This is a convenience function that can be imported directly from the package.

    Args:
        name: Subcommand name, e.g. "exact" or "subleading"
        config: Optional RunConfig; built from ``values`` when omitted
        **values: RunConfig fields such as gamma, t, n

    Returns:
        CommandResult: The subcommand output
    """
    from sixvertex.cli.commands import run_command as _run_command
    from sixvertex.cli.config import build_config

    if config is None:
        config = build_config(values)
    return _run_command(name, config)
