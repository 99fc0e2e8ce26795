"""Exact-arithmetic toolkit for Leibniz and Lie algebras over the rationals."""

from .algebra import (
    AlgebraTable,
    InvariantFingerprint,
    Subspace,
    antisymmetry_violations,
    bracket,
    center,
    derived_series,
    fingerprint,
    ideal_closure,
    leibniz_violations,
    lower_central_series,
    nilpotency_index,
    quotient,
    right_annihilator,
    solvability_index,
    squares_ideal,
)
from .catalog import CatalogEntry, FAMILIES, build, construct
from .derivations import (
    DerivationSpace,
    ExtensionSpec,
    assemble_extension,
    certify_nilradical,
    derivation_space,
    inner_derivation,
    matches_prop_pattern,
    max_nil_independent_upper_triangular,
    nil_independent_pair,
)
from .io import load_algebra
from .linalg import Matrix, char_poly, is_nilpotent_matrix, kernel_basis, rref
from .normalization import normalize_gamma, verify_basis_change, verify_split_decomposition
from .poly import Poly

__version__ = "0.1.0"

__all__ = [
    "AlgebraTable",
    "antisymmetry_violations",
    "assemble_extension",
    "bracket",
    "build",
    "CatalogEntry",
    "center",
    "certify_nilradical",
    "char_poly",
    "construct",
    "derivation_space",
    "DerivationSpace",
    "derived_series",
    "ExtensionSpec",
    "FAMILIES",
    "fingerprint",
    "ideal_closure",
    "inner_derivation",
    "InvariantFingerprint",
    "is_nilpotent_matrix",
    "kernel_basis",
    "leibniz_violations",
    "load_algebra",
    "lower_central_series",
    "matches_prop_pattern",
    "Matrix",
    "max_nil_independent_upper_triangular",
    "nil_independent_pair",
    "nilpotency_index",
    "normalize_gamma",
    "Poly",
    "quotient",
    "right_annihilator",
    "rref",
    "solvability_index",
    "squares_ideal",
    "Subspace",
    "verify_basis_change",
    "verify_split_decomposition",
]

