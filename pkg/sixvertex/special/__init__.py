"""
Special functions: Jacobi theta and elliptic functions, identity suite, quadrature
"""

from sixvertex.special.elliptic import (
    EllipticContext,
    cn,
    complementary_elliptic_k,
    complete_elliptic_k,
    context_from_gamma,
    dn,
    inverse_sn_squared,
    jacobi_Z,
    sn,
)
from sixvertex.special.identities import (
    get_identity,
    identity_residual,
    identity_sweep,
    list_identities,
)
from sixvertex.special.theta import Nome, ThetaEvaluator, ThetaValue, theta, theta_deriv, theta_values

__all__ = [
    "Nome",
    "ThetaEvaluator",
    "ThetaValue",
    "theta",
    "theta_deriv",
    "theta_values",
    "EllipticContext",
    "context_from_gamma",
    "sn",
    "cn",
    "dn",
    "jacobi_Z",
    "complete_elliptic_k",
    "complementary_elliptic_k",
    "inverse_sn_squared",
    "identity_residual",
    "identity_sweep",
    "list_identities",
    "get_identity",
]
