"""Anyon condensation channels and entropic order parameters.

The package models topological sector data (labels, quantum dimensions,
optional twists and duals), branching patterns of condensable algebras, the
restriction and lifting quantum channels they induce on superselected
states, and the relative-entropy order parameter with its index bound.
"""

from .branching import (
    BranchingData,
    CondensableAlgebra,
    condensable_algebra,
    is_lagrangian,
    jones_index,
    overlap_matrix,
    validate_branching,
)
from .catalog import CatalogEntry, GoldenValue, catalog, entry, trivial_condensation, zn_full
from .channels import (
    DiagonalOperator,
    KrausSet,
    SectorState,
    SystemMismatchError,
    embed_condensed,
    embed_source,
    kraus_invariant_residual,
    kraus_lifting,
    kraus_restriction,
    lift,
    lift_coarse,
    restrict,
    round_trip,
    verify_bimodule,
    verify_idempotence,
)
from .duality import PermutationDuality, apply_permutation, find_dualities, verify_duality
from .entropy import (
    EntropyReport,
    PerturbationScan,
    infinite_temperature_state,
    order_parameter,
    perturbation_scan,
    relative_entropy,
    shannon,
    symmetric_state,
)
from .io import SchemaError, load, save
from .search import enumerate_branchings
from .systems import (
    AnyonSystem,
    ValidationReport,
    Violation,
    total_dim_sq,
    validate_system,
)

__all__ = [
    "AnyonSystem",
    "BranchingData",
    "CatalogEntry",
    "CondensableAlgebra",
    "DiagonalOperator",
    "EntropyReport",
    "GoldenValue",
    "KrausSet",
    "PermutationDuality",
    "PerturbationScan",
    "SchemaError",
    "SectorState",
    "SystemMismatchError",
    "ValidationReport",
    "Violation",
    "apply_permutation",
    "catalog",
    "condensable_algebra",
    "embed_condensed",
    "embed_source",
    "entry",
    "enumerate_branchings",
    "find_dualities",
    "infinite_temperature_state",
    "is_lagrangian",
    "jones_index",
    "kraus_invariant_residual",
    "kraus_lifting",
    "kraus_restriction",
    "lift",
    "lift_coarse",
    "load",
    "order_parameter",
    "overlap_matrix",
    "perturbation_scan",
    "relative_entropy",
    "restrict",
    "round_trip",
    "save",
    "shannon",
    "symmetric_state",
    "total_dim_sq",
    "trivial_condensation",
    "validate_branching",
    "validate_system",
    "verify_bimodule",
    "verify_duality",
    "verify_idempotence",
    "zn_full",
]

__version__ = "0.1.0"
