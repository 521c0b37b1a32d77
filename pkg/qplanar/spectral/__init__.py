"""
Signless Laplacian spectral radius, closed-form bounds and the identities of K2 join P(n-2).
"""
from qplanar.spectral.bounds import (
    bound_report,
    h_identities,
    lower_bound_delta,
    merris_bound,
    planar_degree_bound,
)
from qplanar.spectral.data import BoundReport, IdentityCheck, PlanarBound, SpectralResult
from qplanar.spectral.solver import assemble_Q, q_max, quadratic_form, rayleigh_quotient, standard_vector

__all__ = [
    "BoundReport",
    "IdentityCheck",
    "PlanarBound",
    "SpectralResult",
    "assemble_Q",
    "bound_report",
    "h_identities",
    "lower_bound_delta",
    "merris_bound",
    "planar_degree_bound",
    "q_max",
    "quadratic_form",
    "rayleigh_quotient",
    "standard_vector",
]
