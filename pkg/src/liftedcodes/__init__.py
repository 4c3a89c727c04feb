"""Hamming codes lifted to extension fields: construction and verification."""

from .caps import CapExceeded, Caps
from .code import (
    IntersectionArray, LinearCode, code_from_parity, coset_table, covering_radius,
    cr_vector_oracle, is_completely_regular, min_distance,
)
from .gf import Field, field_make, make_extension, prime_field, subfield_embedding
from .graph import build_coset_graph, classical_params, export_graph, verify_distance_regular
from .lifted import (
    HammingSpec, HypothesisError, LiftedCode, closed_form_array, hamming_parity_matrix, lift,
    nesting_check, non_hamming_refutation, rm_symmetry_check,
)
from .matq import MatQ, count_rank, rank, rank_factorization, rank_normal_form

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "Caps", "Field", "HammingSpec", "HypothesisError", "IntersectionArray",
    "LiftedCode", "LinearCode", "MatQ", "build_coset_graph", "classical_params",
    "closed_form_array", "code_from_parity", "coset_table", "count_rank", "covering_radius",
    "cr_vector_oracle", "export_graph", "field_make", "hamming_parity_matrix",
    "is_completely_regular", "lift", "make_extension", "min_distance", "nesting_check",
    "non_hamming_refutation", "prime_field", "rank", "rank_factorization", "rank_normal_form",
    "rm_symmetry_check", "subfield_embedding", "verify_distance_regular",
]
