"""Permutation dualities between condensation patterns.

Two branchings of the same source system are equivalent when a relabelling
of sectors intertwines their channels: a permutation ``sigma`` of the source
labels together with a bijection ``tau`` of the condensed labels such that

    n_B[a, tau(t)] = n_A[sigma(a), t]   for all a, t.

That exact integer identity implies the channel identity
restrict_B(rho) = tau( restrict_A(sigma(rho)) ) for every state, which
:func:`verify_duality` checks numerically on random states.

The search considers only permutations that preserve every piece of sector
data the systems declare: quantum dimensions always, twists and
antiparticle maps whenever present.  The vacuum is always fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Mapping

import numpy as np

from .branching import BranchingData, jones_index
from .channels import SectorState, restrict
from .systems import DEFAULT_TOL, AnyonSystem


@dataclass(frozen=True, eq=False)
class PermutationDuality:
    """A relabelling pair: ``source_perm`` on source labels, ``condensed_perm``
    from the first branching's condensed labels onto the second's."""

    source_perm: Mapping[str, str]
    condensed_perm: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "source_perm", dict(self.source_perm))
        object.__setattr__(self, "condensed_perm", dict(self.condensed_perm))
        for name, perm in (("source_perm", self.source_perm), ("condensed_perm", self.condensed_perm)):
            if len(set(perm.values())) != len(perm):
                raise ValueError(f"{name} is not injective")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermutationDuality):
            return NotImplemented
        return (
            self.source_perm == other.source_perm
            and self.condensed_perm == other.condensed_perm
        )

    def inverse(self) -> "PermutationDuality":
        return PermutationDuality(
            {v: k for k, v in self.source_perm.items()},
            {v: k for k, v in self.condensed_perm.items()},
        )

    def as_dict(self) -> dict:
        return {"source_perm": dict(self.source_perm), "condensed_perm": dict(self.condensed_perm)}


def _check_label_bijection(
    perm: Mapping[str, str],
    domain: AnyonSystem,
    codomain: AnyonSystem,
    tol: float,
    what: str,
):
    if set(perm) != set(domain.labels) or set(perm.values()) != set(codomain.labels):
        raise ValueError(f"{what} must map the labels bijectively")
    if perm[domain.vacuum] != codomain.vacuum:
        raise ValueError(f"{what} must fix the vacuum")
    for a, image in perm.items():
        if abs(domain.dim_of(a) - codomain.dim_of(image)) > tol:
            raise ValueError(f"{what} does not preserve the dimension of {a!r}")


def apply_permutation(duality: PermutationDuality, rho: SectorState) -> SectorState:
    """Reindex a state by the source permutation: the new weight of
    sigma(a) is the old weight of a."""
    system = rho.system
    _check_label_bijection(duality.source_perm, system, system, DEFAULT_TOL, "source_perm")
    out = np.zeros_like(rho.probs)
    for a, image in duality.source_perm.items():
        out[system.index(image)] = rho.probs[system.index(a)]
    return SectorState(system, out)


def _coefficient_residual(
    bA: BranchingData, bB: BranchingData, duality: PermutationDuality
) -> int:
    worst = 0
    for i, a in enumerate(bA.source.labels):
        i_sigma = bA.source.index(duality.source_perm[a])
        for j, t in enumerate(bA.condensed.labels):
            j_tau = bB.condensed.index(duality.condensed_perm[t])
            worst = max(worst, abs(int(bB.n[i, j_tau]) - int(bA.n[i_sigma, j])))
    return worst


def verify_duality(
    bA: BranchingData,
    bB: BranchingData,
    duality: PermutationDuality,
    trials: int = 100,
    seed: int = 0,
) -> float:
    """Largest deviation from the duality identity, coefficients and channels.

    Checks the exact coefficient identity and, over ``trials`` random source
    states, the max-norm gap between restrict_B(rho) and the
    ``condensed_perm``-relabelled restrict_A(sigma(rho)).  Structural
    mismatches (different sources, non-isomorphic condensed systems) raise.
    """
    if bA.source != bB.source:
        raise ValueError("dualities compare branchings of one source system")
    _check_label_bijection(duality.source_perm, bA.source, bA.source, DEFAULT_TOL, "source_perm")
    _check_label_bijection(
        duality.condensed_perm, bA.condensed, bB.condensed, DEFAULT_TOL, "condensed_perm"
    )

    residual = float(_coefficient_residual(bA, bB, duality))
    rng = np.random.default_rng(seed)
    tau_index = [
        bB.condensed.index(duality.condensed_perm[t]) for t in bA.condensed.labels
    ]
    for _ in range(trials):
        raw = rng.random(len(bA.source)) + 1e-12
        rho = SectorState(bA.source, raw / raw.sum())
        lhs = restrict(bB, rho).probs
        via_a = restrict(bA, apply_permutation(duality, rho)).probs
        relabelled = np.zeros_like(via_a)
        for j, j_tau in enumerate(tau_index):
            relabelled[j_tau] = via_a[j]
        residual = max(residual, float(np.max(np.abs(lhs - relabelled))))
    return residual


def _admissible_maps(
    domain: AnyonSystem, codomain: AnyonSystem, tol: float
) -> list[dict[str, str]]:
    """Vacuum-fixing label bijections preserving dims and, when declared,
    twists and antiparticle structure.  Lexicographic in the image tuple."""
    if len(domain) != len(codomain):
        return []
    dom_rest = [l for l in domain.labels if l != domain.vacuum]
    cod_rest = [l for l in codomain.labels if l != codomain.vacuum]
    both_twists = domain.twist is not None and codomain.twist is not None
    both_duals = domain.dual is not None and codomain.dual is not None

    found = []
    for image in permutations(cod_rest):
        perm = {domain.vacuum: codomain.vacuum}
        perm.update(zip(dom_rest, image))
        ok = all(
            abs(domain.dim_of(a) - codomain.dim_of(b)) <= tol for a, b in perm.items()
        )
        if ok and both_twists:
            ok = all(
                domain.twist.get(a, 0) == codomain.twist.get(b, 0) for a, b in perm.items()
            )
        if ok and both_duals:
            ok = all(
                perm[domain.dual.get(a, a)] == codomain.dual.get(b, b)
                for a, b in perm.items()
            )
        if ok:
            found.append(perm)
    return found


def find_dualities(
    bA: BranchingData,
    bB: BranchingData,
    label_cap: int = 8,
    tol: float = DEFAULT_TOL,
) -> list[PermutationDuality]:
    """All permutation dualities between two branchings of one source.

    Exhausts every admissible (sigma, tau) pair and keeps those satisfying
    the coefficient identity exactly; the result is lexicographically
    ordered by the image tuples.  Raises when the source systems differ or
    a label count exceeds ``label_cap`` (factorial search guard).
    """
    if bA.source != bB.source:
        raise ValueError("dualities compare branchings of one source system")
    for system in (bA.source, bA.condensed, bB.condensed):
        if len(system) > label_cap:
            raise ValueError(
                f"{len(system)} labels exceed the search cap {label_cap}"
            )
    if abs(jones_index(bA) - jones_index(bB)) > tol:
        return []

    out = []
    taus = _admissible_maps(bA.condensed, bB.condensed, tol)
    for sigma in _admissible_maps(bA.source, bA.source, tol):
        for tau in taus:
            duality = PermutationDuality(sigma, tau)
            if _coefficient_residual(bA, bB, duality) == 0:
                out.append(duality)
    return out
