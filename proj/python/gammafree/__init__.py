"""Gamma-free 0-1 matrices: exact counts, bijective conversions, checks.

Matrices travel as text (one '0'/'1' line per row, top row first),
sequences and forests as JSON strings, permutations as lists of ints.
"""

from ._gammafree import (
    bessel_tree_numbers,
    callan_to_matrix,
    count_gamma_free,
    count_naf,
    forest_to_perm,
    gamma_witness,
    has_common_rise,
    is_gamma_free,
    matrix_to_callan,
    matrix_to_permpair,
    omega_numbers,
    perm_to_forest,
    permpair_to_matrix,
    poly_bernoulli,
    stirling2,
    verify_egf,
    verify_phi,
    verify_pi,
    verify_psi,
    verify_table1,
    verify_theorem5,
)

__all__ = [
    "bessel_tree_numbers",
    "callan_to_matrix",
    "count_gamma_free",
    "count_naf",
    "forest_to_perm",
    "gamma_witness",
    "has_common_rise",
    "is_gamma_free",
    "matrix_to_callan",
    "matrix_to_permpair",
    "omega_numbers",
    "perm_to_forest",
    "permpair_to_matrix",
    "poly_bernoulli",
    "stirling2",
    "verify_egf",
    "verify_phi",
    "verify_pi",
    "verify_psi",
    "verify_table1",
    "verify_theorem5",
]

__version__ = "0.1.0"
