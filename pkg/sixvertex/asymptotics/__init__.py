"""
Asymptotics package

Leading large-n constants, the fitted constant C, convergence diagnostics
and the first-order correction built from the four turning points.
"""

from sixvertex.asymptotics.constants import (
    AsymptoticConstants,
    AsymptoticRoute,
    CEstimate,
    FirstOrderCoefficients,
    M1Entries,
    constants,
    convergence_table,
    estimate_C,
    first_order_coefficients,
    h_ratio_asym,
    log_h_ratio_asym,
    m1_entries,
    z_asym,
)
from sixvertex.asymptotics.subleading import (
    CorrectionTerm,
    SubleadingConstants,
    constants_at,
    correction_term,
    f_tilde,
    f_value,
    f_value_sweep,
    h_vector,
    q_matrix,
    q_pair_closed_forms,
    residue_identities,
    residue_sums,
    residue_terms,
)

__all__ = [
    "AsymptoticConstants",
    "AsymptoticRoute",
    "CEstimate",
    "FirstOrderCoefficients",
    "M1Entries",
    "constants",
    "convergence_table",
    "estimate_C",
    "first_order_coefficients",
    "h_ratio_asym",
    "log_h_ratio_asym",
    "m1_entries",
    "z_asym",
    "CorrectionTerm",
    "SubleadingConstants",
    "constants_at",
    "correction_term",
    "f_tilde",
    "f_value",
    "f_value_sweep",
    "h_vector",
    "q_matrix",
    "q_pair_closed_forms",
    "residue_identities",
    "residue_sums",
    "residue_terms",
]
