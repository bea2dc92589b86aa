"""Versioned JSON schema for anyon systems, branchings and states.

Documents are strict: unknown fields are rejected, not ignored, and every
rejection names the first offending field.  Numbers round-trip bit-exactly
(integers as JSON integers, reals as JSON doubles, twists as fraction
strings such as "1/2").
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .branching import BranchingData
from .channels import SectorState
from .systems import AnyonSystem

SCHEMA_VERSION = 1

Document = Union[AnyonSystem, BranchingData]


class SchemaError(ValueError):
    """Malformed document; ``field`` is the path of the offending entry."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _check_version(data: dict, path: str):
    key = f"{path}schema_version"
    if "schema_version" not in data:
        raise SchemaError(key, "missing")
    version = data["schema_version"]
    if isinstance(version, bool) or version != SCHEMA_VERSION:
        raise SchemaError(
            key, f"unsupported schema version {version!r}, expected {SCHEMA_VERSION}"
        )


def _reject_unknown(data: dict, allowed: set[str], path: str):
    for key in data:
        if key not in allowed:
            raise SchemaError(f"{path}{key}", "unknown field")


def system_to_dict(system: AnyonSystem) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "labels": list(system.labels),
        "dims": list(system.dims),
        "vacuum": system.vacuum,
    }
    if system.dual is not None:
        doc["dual"] = dict(system.dual)
    if system.twist is not None:
        doc["twist"] = {k: str(v) for k, v in system.twist.items()}
    return doc


def system_from_dict(data, path: str = "") -> AnyonSystem:
    if not isinstance(data, dict):
        raise SchemaError(path.rstrip("."), "expected an object")
    _check_version(data, path)
    _reject_unknown(
        data, {"schema_version", "labels", "dims", "vacuum", "dual", "twist"}, path
    )
    for field in ("labels", "dims", "vacuum"):
        if field not in data:
            raise SchemaError(f"{path}{field}", "missing")
    labels = data["labels"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise SchemaError(f"{path}labels", "expected a list of strings")
    dims = data["dims"]
    if not isinstance(dims, list) or not all(_is_number(x) for x in dims):
        raise SchemaError(f"{path}dims", "expected a list of numbers")
    if len(dims) != len(labels):
        raise SchemaError(f"{path}dims", f"{len(dims)} entries for {len(labels)} labels")
    if not isinstance(data["vacuum"], str):
        raise SchemaError(f"{path}vacuum", "expected a string")

    dual = None
    if "dual" in data:
        raw = data["dual"]
        if not isinstance(raw, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in raw.items()
        ):
            raise SchemaError(f"{path}dual", "expected an object mapping labels to labels")
        dual = raw
    twist = None
    if "twist" in data:
        raw = data["twist"]
        if not isinstance(raw, dict):
            raise SchemaError(f"{path}twist", "expected an object mapping labels to fractions")
        twist = {}
        for k, v in raw.items():
            try:
                twist[k] = Fraction(v)
            except (ValueError, TypeError, ZeroDivisionError):
                raise SchemaError(f"{path}twist.{k}", f"not a fraction: {v!r}") from None
    try:
        return AnyonSystem(tuple(labels), tuple(dims), data["vacuum"], dual, twist)
    except ValueError as exc:
        raise SchemaError(path.rstrip(".") or "system", str(exc)) from None


def branching_to_dict(b: BranchingData) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "source": system_to_dict(b.source),
        "condensed": system_to_dict(b.condensed),
        "n": [[int(x) for x in row] for row in b.n],
    }


def branching_from_dict(data, path: str = "") -> BranchingData:
    if not isinstance(data, dict):
        raise SchemaError(path.rstrip("."), "expected an object")
    _check_version(data, path)
    _reject_unknown(data, {"schema_version", "source", "condensed", "n"}, path)
    for field in ("source", "condensed", "n"):
        if field not in data:
            raise SchemaError(f"{path}{field}", "missing")
    source = system_from_dict(data["source"], f"{path}source.")
    condensed = system_from_dict(data["condensed"], f"{path}condensed.")
    rows = data["n"]
    if not isinstance(rows, list) or len(rows) != len(source):
        raise SchemaError(f"{path}n", f"expected {len(source)} rows")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != len(condensed):
            raise SchemaError(f"{path}n[{i}]", f"expected {len(condensed)} entries")
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                raise SchemaError(f"{path}n[{i}][{j}]", f"expected an integer, got {x!r}")
            if x < 0:
                raise SchemaError(f"{path}n[{i}][{j}]", f"negative coefficient {x}")
    try:
        return BranchingData(source, condensed, rows)
    except ValueError as exc:
        raise SchemaError(f"{path}n", str(exc)) from None


def state_to_dict(state: SectorState) -> dict:
    return {"probs": [float(x) for x in state.probs]}


def state_from_dict(data, system: AnyonSystem, path: str = "") -> SectorState:
    if not isinstance(data, dict):
        raise SchemaError(path.rstrip("."), "expected an object")
    _reject_unknown(data, {"probs"}, path)
    if "probs" not in data:
        raise SchemaError(f"{path}probs", "missing")
    raw = data["probs"]
    if not isinstance(raw, list):
        raise SchemaError(f"{path}probs", "expected a list")
    probs = []
    for i, x in enumerate(raw):
        if isinstance(x, str):
            try:
                probs.append(float(Fraction(x)))
            except (ValueError, ZeroDivisionError):
                raise SchemaError(f"{path}probs[{i}]", f"not a number: {x!r}") from None
        elif _is_number(x):
            probs.append(float(x))
        else:
            raise SchemaError(f"{path}probs[{i}]", f"not a number: {x!r}")
    try:
        return SectorState(system, probs)
    except ValueError as exc:
        raise SchemaError(f"{path}probs", str(exc)) from None


def to_dict(value: Document) -> dict:
    if isinstance(value, BranchingData):
        return branching_to_dict(value)
    if isinstance(value, AnyonSystem):
        return system_to_dict(value)
    raise TypeError(f"cannot serialise {type(value).__name__}")


def from_dict(data) -> Document:
    if isinstance(data, dict) and "n" in data:
        return branching_from_dict(data)
    if isinstance(data, dict) and "labels" in data:
        return system_from_dict(data)
    raise SchemaError("", "document is neither an anyon system nor branching data")


def dumps(value: Document) -> str:
    return json.dumps(to_dict(value), indent=2)


def loads(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"invalid JSON: {exc}") from None
    return from_dict(data)


def save(value: Document, path: str | Path):
    Path(path).write_text(dumps(value) + "\n", encoding="utf-8")


def load(path: str | Path) -> Document:
    return loads(Path(path).read_text(encoding="utf-8"))
