"""Command-line front end.

Subcommands: validate, condense, entropy, sweep, enumerate, duality,
catalog.  Outputs are JSON (reports) or CSV (sweeps), written to stdout or
to --output.  Exit codes: 0 success, 1 domain failure (validation or bound
violation), 2 usage or I/O trouble.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path

import numpy as np

from . import io as cio
from .branching import BranchingData, CondensableAlgebra, validate_branching
from .catalog import catalog, entry
from .channels import (
    SectorState,
    lift_coarse,
    restrict,
    round_trip,
    verify_idempotence,
)
from .duality import find_dualities, verify_duality
from .entropy import order_parameter
from .search import enumerate_branchings
from .systems import AnyonSystem, validate_system

GRID_POINT_CAP = 10**7


@dataclass
class CliConfig:
    tolerance: float = 1e-9
    log_base: str = "natural"
    grid_resolution: int = 50
    output_path: str | None = None
    seed: int = 0

    @property
    def bits(self) -> bool:
        return self.log_base == "bits"


class UsageError(Exception):
    pass


def _parse_state_csv(text: str, system: AnyonSystem) -> SectorState:
    # Accepts exact rationals like 1/3 so golden values hit exactly.
    parts = [p.strip() for p in text.split(",")]
    try:
        probs = [float(Fraction(p)) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse state {text!r}: {exc}") from None
    if len(probs) != len(system):
        raise UsageError(f"state has {len(probs)} entries, system has {len(system)}")
    try:
        return SectorState(system, probs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_branching(args) -> BranchingData:
    if getattr(args, "catalog", None):
        return entry(args.catalog).branching
    if getattr(args, "branching", None):
        doc = cio.load(args.branching)
        if not isinstance(doc, BranchingData):
            raise UsageError(f"{args.branching} does not contain branching data")
        return doc
    raise UsageError("provide --catalog ID or --branching FILE")


def _load_state(args, system: AnyonSystem) -> SectorState:
    if getattr(args, "state", None):
        return _parse_state_csv(args.state, system)
    if getattr(args, "state_file", None):
        data = json.loads(Path(args.state_file).read_text(encoding="utf-8"))
        return cio.state_from_dict(data, system)
    raise UsageError("provide --state P1,P2,... or --state-file FILE")


def _emit(text: str, cfg: CliConfig):
    if cfg.output_path:
        Path(cfg.output_path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _emit_json(payload, cfg: CliConfig):
    _emit(json.dumps(payload, indent=2), cfg)


def _require_valid(b: BranchingData, cfg: CliConfig) -> bool:
    report = validate_branching(b, cfg.tolerance)
    if not report.ok:
        _emit_json({"error": "branching data is not condensable", **report.as_dict()}, cfg)
        return False
    return True


def cmd_validate(args, cfg: CliConfig) -> int:
    targets: list[tuple[str, AnyonSystem | BranchingData]] = []
    for entry_id in args.catalog or []:
        targets.append((entry_id, entry(entry_id).branching))
    for path in args.files:
        targets.append((path, cio.load(path)))
    if not targets:
        raise UsageError("nothing to validate")
    reports = []
    all_ok = True
    for name, doc in targets:
        if isinstance(doc, BranchingData):
            report = validate_branching(doc, cfg.tolerance)
        else:
            report = validate_system(doc, cfg.tolerance)
        reports.append({"target": name, **report.as_dict()})
        all_ok = all_ok and report.ok
    _emit_json(reports, cfg)
    return 0 if all_ok else 1


def cmd_condense(args, cfg: CliConfig) -> int:
    b = _load_branching(args)
    if not _require_valid(b, cfg):
        return 1
    rho = _load_state(args, b.source)
    restricted = restrict(b, rho)
    lifted = round_trip(b, rho)
    coarse = lift_coarse(b, rho)
    payload = {
        "restricted": [float(x) for x in restricted.probs],
        "lifted": [float(x) for x in lifted.probs],
        "residuals": {
            "idempotence": verify_idempotence(b, rho),
            "coarse_agreement": float(np.max(np.abs(lifted.probs - coarse.probs))),
            "restricted_sum": abs(float(restricted.probs.sum()) - 1.0),
            "lifted_sum": abs(float(lifted.probs.sum()) - 1.0),
        },
    }
    _emit_json(payload, cfg)
    return 0


def cmd_entropy(args, cfg: CliConfig) -> int:
    b = _load_branching(args)
    if not _require_valid(b, cfg):
        return 1
    rho = _load_state(args, b.source)
    report = order_parameter(b, rho, bits=cfg.bits)
    _emit_json(report.as_dict(labels=b.source.labels), cfg)
    if report.order_parameter > report.bound + 1e-9:
        return 1
    return 0


def _simplex_grid(parts: int, resolution: int):
    # Integer compositions of `resolution`, first coordinate descending,
    # so the vacuum vertex comes first.
    def rec(remaining: int, slots: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    return rec(resolution, parts)


def cmd_sweep(args, cfg: CliConfig) -> int:
    b = _load_branching(args)
    if not _require_valid(b, cfg):
        return 1
    r = cfg.grid_resolution
    parts = len(b.source)
    points = comb(r + parts - 1, parts - 1)
    if points > GRID_POINT_CAP:
        raise UsageError(
            f"grid of {points} points exceeds the cap of {GRID_POINT_CAP}; lower --grid-resolution"
        )
    header = ",".join([f"p_{label}" for label in b.source.labels] + ["S", "bound", "residual"])
    lines = [header]
    best = (-1.0, None)
    bound = 0.0
    for combo in _simplex_grid(parts, r):
        probs = [k / r for k in combo]
        report = order_parameter(b, SectorState(b.source, probs), bits=cfg.bits)
        bound = report.bound
        value = report.order_parameter
        lines.append(
            ",".join(
                [f"{p!r}" for p in probs]
                + [f"{value!r}", f"{report.bound!r}", f"{report.formula_residual!r}"]
            )
        )
        if value > best[0]:
            best = (value, probs)
    argmax = "|".join(repr(p) for p in best[1])
    lines.append(f"# max_S={best[0]!r} argmax={argmax} bound={bound!r}")
    _emit("\n".join(lines), cfg)
    if best[0] > bound + 1e-9:
        return 1
    return 0


def cmd_enumerate(args, cfg: CliConfig) -> int:
    if args.catalog:
        source = entry(args.catalog).branching.source
    elif args.source:
        doc = cio.load(args.source)
        if isinstance(doc, BranchingData):
            source = doc.source
        else:
            source = doc
    else:
        raise UsageError("provide --catalog ID or --source FILE")
    try:
        weights = [int(x) for x in args.algebra.split(",")]
        algebra = CondensableAlgebra(source, tuple(weights))
        results = enumerate_branchings(
            source, algebra, args.max_sectors, args.max_dim, cfg.tolerance
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "count": len(results),
        "branchings": [cio.branching_to_dict(b) for b in results],
    }
    _emit_json(payload, cfg)
    return 0


def cmd_duality(args, cfg: CliConfig) -> int:
    if args.catalog_a and args.catalog_b:
        bA = entry(args.catalog_a).branching
        bB = entry(args.catalog_b).branching
    elif args.a and args.b:
        docA, docB = cio.load(args.a), cio.load(args.b)
        if not isinstance(docA, BranchingData) or not isinstance(docB, BranchingData):
            raise UsageError("duality inputs must be branching files")
        bA, bB = docA, docB
    else:
        raise UsageError("provide --a/--b files or --catalog-a/--catalog-b ids")
    try:
        found = find_dualities(bA, bB)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "count": len(found),
        "dualities": [
            {
                **d.as_dict(),
                "residual": verify_duality(bA, bB, d, trials=args.trials, seed=cfg.seed),
            }
            for d in found
        ],
    }
    _emit_json(payload, cfg)
    return 0


def cmd_catalog(args, cfg: CliConfig) -> int:
    if args.action == "list":
        payload = {
            "entries": [{"id": e.id, "description": e.description} for e in catalog()]
        }
        _emit_json(payload, cfg)
        return 0
    item = entry(args.id)
    payload = {
        "id": item.id,
        "description": item.description,
        "branching": cio.branching_to_dict(item.branching),
        "expected": [g.as_dict() for g in item.expected],
    }
    _emit_json(payload, cfg)
    return 0


def _add_global_options(parser: argparse.ArgumentParser, suppress: bool):
    # The same flags are registered on the main parser (with real defaults)
    # and on every subparser (defaulting to SUPPRESS so a flag given before
    # the subcommand is not clobbered); this lets them appear on either
    # side of the subcommand.
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--tolerance", type=float, default=default(1e-9))
    parser.add_argument(
        "--bits", action="store_true", default=default(False), help="report entropies in base 2"
    )
    parser.add_argument("--seed", type=int, default=default(0))
    parser.add_argument("--output", default=default(None), help="write output to this file")
    parser.add_argument("--grid-resolution", type=int, default=default(50))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anycond",
        description="Anyon condensation channels and entropic order parameters.",
    )
    _add_global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_command(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _add_global_options(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add_command("validate", cmd_validate, help="validate systems or branchings")
    p.add_argument("files", nargs="*")
    p.add_argument("--catalog", action="append")

    for name, func, wants_state in (
        ("condense", cmd_condense, True),
        ("entropy", cmd_entropy, True),
        ("sweep", cmd_sweep, False),
    ):
        p = add_command(name, func)
        p.add_argument("--catalog")
        p.add_argument("--branching")
        if wants_state:
            p.add_argument("--state")
            p.add_argument("--state-file")

    p = add_command("enumerate", cmd_enumerate, help="search branchings for a condensate")
    p.add_argument("--catalog")
    p.add_argument("--source")
    p.add_argument("--algebra", required=True, help="vacuum column, e.g. 1,1,0,0")
    p.add_argument("--max-sectors", type=int, default=4)
    p.add_argument("--max-dim", type=int, default=2)

    p = add_command("duality", cmd_duality, help="search permutation dualities")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--catalog-a")
    p.add_argument("--catalog-b")
    p.add_argument("--trials", type=int, default=100)

    p = add_command("catalog", cmd_catalog, help="list or show built-in entries")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("id", nargs="?")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tolerance <= 0:
        parser.error("--tolerance must be positive")
    if args.grid_resolution < 1:
        parser.error("--grid-resolution must be at least 1")
    if args.command == "catalog" and args.action == "show" and not args.id:
        parser.error("catalog show requires an entry id")
    cfg = CliConfig(
        tolerance=args.tolerance,
        log_base="bits" if args.bits else "natural",
        grid_resolution=args.grid_resolution,
        output_path=args.output,
        seed=args.seed,
    )
    try:
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (cio.SchemaError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
