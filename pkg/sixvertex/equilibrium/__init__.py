"""
Equilibrium measure of the antiferroelectric log-gas
"""

from sixvertex.core.params import ModelParams
from sixvertex.equilibrium.elliptic_layer import (
    EllipticConsistency,
    elliptic_consistency,
    elliptic_coordinate,
    elliptic_inverse,
    resolvent_elliptic,
    u_infinity,
)
from sixvertex.equilibrium.endpoints import (
    Endpoints,
    centroid_formula,
    endpoint_differences,
    endpoints,
    endpoints_from_theta,
    gaps_from_theta,
)
from sixvertex.equilibrium.measure import (
    EquilibriumMeasure,
    density,
    g_function,
    g_jump,
    lagrange_multiplier,
    minimal_energy,
    resolvent,
    variational_residual,
)

__all__ = [
    "ModelParams",
    "Endpoints",
    "EquilibriumMeasure",
    "EllipticConsistency",
    "endpoints",
    "endpoints_from_theta",
    "endpoint_differences",
    "gaps_from_theta",
    "centroid_formula",
    "density",
    "resolvent",
    "g_function",
    "g_jump",
    "variational_residual",
    "lagrange_multiplier",
    "minimal_energy",
    "elliptic_coordinate",
    "elliptic_inverse",
    "resolvent_elliptic",
    "elliptic_consistency",
    "u_infinity",
]
