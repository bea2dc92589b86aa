"""Exhaustive search for branching matrices compatible with a condensate.

Given an integral-dimension source system and the vacuum column (the
condensable algebra), this module enumerates every condensed system with at
most ``max_sectors`` sectors of integer dimension at most ``max_dim``,
together with every non-negative integer matrix satisfying both
quantum-dimension constraints.  The search is complete within the stated
bounds:

* the index lam and the condensed total dimension D2/lam are fixed by the
  vacuum column, which prunes the possible condensed dimension multisets;
* each source row must satisfy d_a = sum_t n[a, t] * d_t, which bounds every
  entry by floor(d_a / d_t) and makes the per-row solution sets finite;
* rows are then combined depth-first under the running column constraint
  sum_a n[a, t] * d_a = lam * d_t.

Condensed labels are pure gauge, so results are deduplicated up to
permutations of the non-vacuum condensed sectors via a canonical form that
sorts columns by (dimension, entries).  The output order is deterministic.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

import numpy as np

from .branching import BranchingData, CondensableAlgebra, validate_branching
from .systems import DEFAULT_TOL, AnyonSystem


def _integer_dims(system: AnyonSystem, tol: float) -> list[int]:
    dims = []
    for label, d in zip(system.labels, system.dims):
        if abs(d - round(d)) > tol:
            raise ValueError(f"enumeration requires integer dims; sector {label!r} has d = {d}")
        dims.append(int(round(d)))
    return dims


def _dim_multisets(budget: int, max_len: int, max_dim: int) -> list[tuple[int, ...]]:
    """Non-decreasing tuples of dims in [1, max_dim] whose squares sum to budget."""
    out = []
    for length in range(0, max_len + 1):
        for combo in combinations_with_replacement(range(1, max_dim + 1), length):
            if sum(d * d for d in combo) == budget:
                out.append(combo)
    return out


def _row_solutions(target: int, dims: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All non-negative integer vectors v with sum_j v[j] * dims[j] = target."""
    if target < 0:
        return []
    solutions: list[tuple[int, ...]] = []

    def extend(j: int, left: int, prefix: tuple[int, ...]):
        if j == len(dims):
            if left == 0:
                solutions.append(prefix)
            return
        for v in range(left // dims[j] + 1):
            extend(j + 1, left - v * dims[j], prefix + (v,))

    extend(0, target, ())
    return solutions


def canonical_matrix(n: np.ndarray, condensed_dims, vacuum_col: int) -> tuple:
    """Canonical key of a branching matrix under condensed relabelling.

    The vacuum column stays first; the remaining columns are sorted by
    (dimension, entries).  Two matrices related by a permutation of the
    non-vacuum condensed sectors share the same key.
    """
    rest = sorted(
        (int(condensed_dims[j]), tuple(int(x) for x in n[:, j]))
        for j in range(n.shape[1])
        if j != vacuum_col
    )
    vac = tuple(int(x) for x in n[:, vacuum_col])
    return (vac, tuple(rest))


def _condensed_labels(count: int) -> tuple[str, ...]:
    return ("phi",) + tuple(f"t{i}" for i in range(1, count + 1))


def enumerate_branchings(
    source: AnyonSystem,
    algebra: CondensableAlgebra,
    max_sectors: int,
    max_dim: int,
    tol: float = DEFAULT_TOL,
) -> list[BranchingData]:
    """All valid branchings whose vacuum column equals ``algebra``.

    Results are deduplicated up to relabelling of the non-vacuum condensed
    sectors and returned in a deterministic order (sector count, condensed
    dims, then matrix entries).  Raises ``ValueError`` for non-integer
    source dims or bounds below 1.
    """
    if algebra.system != source:
        raise ValueError("condensable algebra is defined over a different system")
    if max_sectors < 1 or max_dim < 1:
        raise ValueError("max_sectors and max_dim must be at least 1")

    d = _integer_dims(source, tol)
    coeff = algebra.coefficients
    vac = source.vacuum_index
    lam = sum(c * di for c, di in zip(coeff, d))
    d2_source = sum(di * di for di in d)
    if d2_source % lam != 0:
        return []
    rest_budget = d2_source // lam - 1
    if rest_budget < 0:
        return []

    found: dict[tuple, BranchingData] = {}
    for rest_dims in _dim_multisets(rest_budget, max_sectors - 1, max_dim):
        k = len(rest_dims)
        col_targets = [lam * dj for dj in rest_dims]

        # Row of the source vacuum is forced to the vacuum-column indicator.
        row_options: list[list[tuple[int, ...]]] = []
        feasible = True
        for i in range(len(source)):
            if i == vac:
                row_options.append([(0,) * k])
                continue
            options = _row_solutions(d[i] - coeff[i], rest_dims)
            if not options:
                feasible = False
                break
            row_options.append(options)
        if not feasible:
            continue

        matrices: list[list[tuple[int, ...]]] = []

        def fill(i: int, weights: list[int], rows: list[tuple[int, ...]]):
            if i == len(source):
                if weights == col_targets:
                    matrices.append(list(rows))
                return
            for option in row_options[i]:
                nxt = [w + v * d[i] for w, v in zip(weights, option)]
                if all(w <= t for w, t in zip(nxt, col_targets)):
                    fill(i + 1, nxt, rows + [option])

        fill(0, [0] * k, [])

        for rows in matrices:
            n = np.zeros((len(source), k + 1), dtype=np.int64)
            n[:, 0] = coeff
            for i, row in enumerate(rows):
                n[i, 1:] = row
            # Canonical column order: sort the non-vacuum columns.
            order = sorted(range(k), key=lambda j: (rest_dims[j], tuple(n[:, j + 1])))
            n_sorted = np.concatenate(
                [n[:, :1]] + [n[:, j + 1 : j + 2] for j in order], axis=1
            )
            dims_sorted = (1,) + tuple(rest_dims[j] for j in order)
            condensed = AnyonSystem(
                labels=_condensed_labels(k),
                dims=tuple(float(x) for x in dims_sorted),
                vacuum="phi",
            )
            candidate = BranchingData(source, condensed, n_sorted)
            if not validate_branching(candidate, tol).ok:
                continue
            key = canonical_matrix(candidate.n, dims_sorted, 0)
            found.setdefault((k + 1,) + key, candidate)

    ordered = sorted(found.items(), key=lambda kv: kv[0])
    return [b for _, b in ordered]
