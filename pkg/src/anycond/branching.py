"""Branching data of a condensable algebra and its consistency equations.

A symmetry-breaking pattern is recorded as the non-negative integer matrix
n[a, t] telling how each sector a of the uncondensed system decomposes into
sectors t of the condensed one,

    a -> sum_t n[a, t] * t.

Condensability at this level means the two quantum-dimension constraints

    d_a = sum_t n[a, t] * d_t                 (row sums, weighted)
    lam * d_t = sum_a n[a, t] * d_a           (column sums, weighted)

where lam = sum_a n[a, vacuum_t] * d_a is the quantum dimension of the
condensed vacuum.  lam equals the index of the inclusion of the condensed
observable algebra inside the uncondensed one, and equals the ratio of the
total quantum dimensions, lam = D2(source) / D2(condensed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .systems import (
    DEFAULT_TOL,
    AnyonSystem,
    ValidationReport,
    Violation,
    total_dim_sq,
    validate_system,
)


def _as_int_matrix(raw, rows: int, cols: int) -> np.ndarray:
    n = np.asarray(raw)
    if n.shape != (rows, cols):
        raise ValueError(f"branching matrix has shape {n.shape}, expected {(rows, cols)}")
    if not np.issubdtype(n.dtype, np.integer):
        rounded = np.rint(n)
        if not np.array_equal(rounded, n):
            raise ValueError("branching coefficients must be integers")
        n = rounded
    n = n.astype(np.int64)
    if np.any(n < 0):
        raise ValueError("branching coefficients must be non-negative")
    n.setflags(write=False)
    return n


@dataclass(frozen=True, eq=False)
class BranchingData:
    """One condensation pattern: source system, condensed system, matrix n.

    Rows of ``n`` follow the source label order, columns the condensed label
    order.  The matrix is coerced to a read-only int array; negative or
    fractional entries are rejected at construction.  All semantic checks
    (the dimension constraints, antiparticle symmetry, the boson condition)
    live in :func:`validate_branching`.
    """

    source: AnyonSystem
    condensed: AnyonSystem
    n: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "n", _as_int_matrix(self.n, len(self.source), len(self.condensed))
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, BranchingData):
            return NotImplemented
        return (
            self.source == other.source
            and self.condensed == other.condensed
            and np.array_equal(self.n, other.n)
        )

    @property
    def vacuum_column_index(self) -> int:
        return self.condensed.vacuum_index

    @property
    def vacuum_column(self) -> np.ndarray:
        return self.n[:, self.vacuum_column_index]

    @property
    def source_dims(self) -> np.ndarray:
        return self.source.dim_array

    @property
    def condensed_dims(self) -> np.ndarray:
        return self.condensed.dim_array


@dataclass(frozen=True)
class CondensableAlgebra:
    """The condensate as a weighted sum of source sectors.

    ``coefficients[a]`` is the multiplicity with which sector a enters the
    condensed vacuum; it is the vacuum column of a branching matrix.  The
    source vacuum always enters exactly once.
    """

    system: AnyonSystem
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) != len(self.system):
            raise ValueError("one coefficient per source sector required")
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be non-negative")
        if coeffs[self.system.vacuum_index] != 1:
            raise ValueError("the source vacuum must enter the condensate exactly once")

    @classmethod
    def from_labels(cls, system: AnyonSystem, weights: dict[str, int]) -> "CondensableAlgebra":
        coeffs = [0] * len(system)
        for label, w in weights.items():
            coeffs[system.index(label)] = int(w)
        return cls(system, tuple(coeffs))


def condensable_algebra(b: BranchingData) -> CondensableAlgebra:
    """The vacuum column of ``b`` viewed as a condensable algebra."""
    return CondensableAlgebra(b.source, tuple(int(c) for c in b.vacuum_column))


def jones_index(b: BranchingData) -> float:
    """Index of the inclusion, lam = sum_a n[a, vacuum] * d_a.

    Equals the quantum dimension of the condensed vacuum.  The agreement
    with the ratio D2(source)/D2(condensed) is recorded as a residual by
    :func:`validate_branching`.
    """
    return float(b.vacuum_column @ b.source_dims)


def overlap_matrix(b: BranchingData) -> np.ndarray:
    """Symmetric pairing M[a, b] = sum_t n[a, t] * n[b, t] (that is, n @ n.T).

    Counts shared condensation channels between two source sectors; it is
    positive semidefinite by construction and drives the coarse form of the
    lifted probabilities.
    """
    return b.n @ b.n.T


def is_lagrangian(b: BranchingData, tol: float = DEFAULT_TOL) -> bool:
    """Whether the condensate swallows everything: all sectors enter the
    vacuum column and lam = D2(source), so the condensed theory is trivial."""
    lam = jones_index(b)
    return bool(np.all(b.vacuum_column > 0)) and abs(lam - total_dim_sq(b.source)) <= tol


def validate_branching(b: BranchingData, tol: float = DEFAULT_TOL) -> ValidationReport:
    """Check every branching invariant; empty report means condensable.

    Optional antiparticle and twist data gate the corresponding checks:
    when the data is missing the check lands in ``unchecked``.  Metrics
    carry the index and its residual against D2(source)/D2(condensed).
    """
    bad: list[Violation] = []
    unchecked: list[str] = []

    for prefix, system in (("source", b.source), ("condensed", b.condensed)):
        sub = validate_system(system, tol)
        bad.extend(Violation(f"{prefix}:{v.rule}", v.detail) for v in sub.violations)

    d_a = b.source_dims
    d_t = b.condensed_dims
    phi = b.vacuum_column_index
    lam = jones_index(b)

    vac_row = b.n[b.source.vacuum_index]
    want = np.zeros(len(b.condensed), dtype=np.int64)
    want[phi] = 1
    if not np.array_equal(vac_row, want):
        bad.append(
            Violation("vacuum-row", "source vacuum must restrict to the condensed vacuum alone")
        )

    row_sums = b.n @ d_t
    for i, label in enumerate(b.source.labels):
        if abs(row_sums[i] - d_a[i]) > tol:
            bad.append(
                Violation(
                    "dim-restriction",
                    f"sector {label!r}: sum_t n*d_t = {float(row_sums[i])!r} "
                    f"!= d_a = {float(d_a[i])!r}",
                )
            )

    col_sums = b.n.T @ d_a
    for j, label in enumerate(b.condensed.labels):
        if abs(col_sums[j] - lam * d_t[j]) > tol:
            bad.append(
                Violation(
                    "dim-lift",
                    f"condensed sector {label!r}: sum_a n*d_a = {float(col_sums[j])!r} "
                    f"!= lam*d_t = {float(lam * d_t[j])!r}",
                )
            )

    for j, label in enumerate(b.condensed.labels):
        if not np.any(b.n[:, j]):
            bad.append(Violation("empty-column", f"condensed sector {label!r} receives nothing"))

    if b.source.dual is not None and b.condensed.dual is not None:
        for i, a in enumerate(b.source.labels):
            for j, t in enumerate(b.condensed.labels):
                ibar = b.source.index(b.source.dual.get(a, a))
                jbar = b.condensed.index(b.condensed.dual.get(t, t))
                if b.n[i, j] != b.n[ibar, jbar]:
                    bad.append(
                        Violation(
                            "dual-symmetry",
                            f"n[{a!r},{t!r}] = {b.n[i, j]} but the antiparticle entry "
                            f"is {b.n[ibar, jbar]}",
                        )
                    )
    else:
        unchecked.append("dual-symmetry")

    if b.source.twist is not None:
        from fractions import Fraction

        for i, a in enumerate(b.source.labels):
            if b.vacuum_column[i] > 0 and b.source.twist.get(a, Fraction(0)) != 0:
                bad.append(
                    Violation("boson-condition", f"condensed sector {a!r} is not a boson")
                )
    else:
        unchecked.append("boson-condition")

    dim_ratio = total_dim_sq(b.source) / total_dim_sq(b.condensed)
    metrics = {
        "jones_index": lam,
        "dim_ratio": dim_ratio,
        "index_residual": abs(lam - dim_ratio),
    }
    if metrics["index_residual"] > tol:
        bad.append(
            Violation(
                "index-ratio",
                f"index {lam!r} != D2 ratio {dim_ratio!r}",
            )
        )

    return ValidationReport(tuple(bad), tuple(unchecked), metrics)
