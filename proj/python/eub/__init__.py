"""Entropic uncertainty bounds for projective measurements.

Thin Python layer over the C++ core. All entropies are in nats unless a
function says otherwise.
"""

from ._eub import (
    InvalidInputError,
    NumericError,
    UnitarityError,
    bounds,
    build_family,
    direct_sum_vector,
    entropy_sum,
    fourier_matrix,
    haar_random_unitary,
    majorizes,
    measurement_probabilities,
    multi_bounds,
    multi_profile,
    o3_matrix,
    operator_norm,
    optimal_bound_numeric,
    overlap_vector,
    random_pure_state,
    renyi_entropy,
    shannon_entropy,
    sk_profile,
    sweep_csv,
    tsallis_entropy,
    unitary_fractional_power,
    validity_margin,
    von_neumann_entropy,
)

__all__ = [
    "InvalidInputError",
    "NumericError",
    "UnitarityError",
    "bounds",
    "build_family",
    "direct_sum_vector",
    "entropy_sum",
    "fourier_matrix",
    "haar_random_unitary",
    "majorizes",
    "measurement_probabilities",
    "multi_bounds",
    "multi_profile",
    "o3_matrix",
    "operator_norm",
    "optimal_bound_numeric",
    "overlap_vector",
    "random_pure_state",
    "renyi_entropy",
    "shannon_entropy",
    "sk_profile",
    "sweep_csv",
    "tsallis_entropy",
    "unitary_fractional_power",
    "validity_margin",
    "von_neumann_entropy",
]
