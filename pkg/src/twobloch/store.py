"""Catalog JSON persistence.

Each entry is ``{id, generators, class, ket, frame}``.  Amplitudes are
written as ``[re, im, k]`` meaning ``(re + i·im) / sqrt(2**k)``, so the file
holds integers only.
"""

from __future__ import annotations

import json
import os

from .catalog import StabilizerState
from .errors import CatalogIOError, InvariantViolation, SchemaError, TwoBlochError
from .exact import GaussArray
from .frames import frame_from_group, frame_from_json
from .groups import StateClass, classify, group_from_strings
from .oracle import ExactKet, density_from_group, density_from_ket

_KEYS = {"id", "generators", "class", "ket", "frame"}


def ket_to_json(k: ExactKet) -> list[list[int]]:
    exp = k.norm_sq.bit_length() - 1
    if 1 << exp != k.norm_sq:
        raise ValueError(f"norm_sq {k.norm_sq} is not a power of two")
    return [[int(k.amplitudes.re[i]), int(k.amplitudes.im[i]), exp] for i in range(4)]


def ket_from_json(data) -> ExactKet:
    if not (isinstance(data, list) and len(data) == 4):
        raise SchemaError("ket must be a list of 4 amplitudes")
    for amp in data:
        if not (isinstance(amp, list) and len(amp) == 3 and all(type(v) is int for v in amp)):
            raise SchemaError(f"amplitude {amp!r} must be [re, im, denom_log2] integers")
    exps = {amp[2] for amp in data}
    if len(exps) != 1 or min(exps) < 0:
        raise InvariantViolation("amplitudes must share one non-negative normalization exponent")
    amps = GaussArray([a[0] for a in data], [a[1] for a in data])
    try:
        return ExactKet(amps, 1 << exps.pop())
    except ValueError as exc:
        raise InvariantViolation(f"ket is not normalized: {exc}") from None


def state_to_json(s: StabilizerState) -> dict:
    return {
        "id": s.id,
        "generators": s.group.generator_strings(),
        "class": str(s.state_class),
        "ket": ket_to_json(s.ket),
        "frame": s.frame.to_json(),
    }


def state_from_json(obj) -> StabilizerState:
    if not isinstance(obj, dict) or set(obj) != _KEYS:
        raise SchemaError(f"state entry must have exactly the keys {sorted(_KEYS)}")
    gens = obj["generators"]
    if not (isinstance(gens, list) and len(gens) == 2 and all(isinstance(g, str) for g in gens)):
        raise SchemaError("generators must be two Pauli strings")
    if type(obj["id"]) is not int or obj["class"] not in {c.value for c in StateClass}:
        raise SchemaError("bad id or class field")
    try:
        group = group_from_strings(*gens)
    except TwoBlochError as exc:
        raise InvariantViolation(f"state {obj['id']}: {exc}") from None
    ket = ket_from_json(obj["ket"])
    try:
        frame = frame_from_json(obj["frame"])
    except ValueError as exc:
        raise SchemaError(f"state {obj['id']}: {exc}") from None
    cls = StateClass(obj["class"])
    if cls is not classify(group):
        raise InvariantViolation(f"state {obj['id']}: class {cls} disagrees with its group")
    if density_from_ket(ket) != density_from_group(group):
        raise InvariantViolation(f"state {obj['id']}: ket is not stabilized by its group")
    if frame != frame_from_group(group):
        raise InvariantViolation(f"state {obj['id']}: frame disagrees with its group")
    return StabilizerState(obj["id"], group, cls, ket, frame)


def catalog_to_json(states) -> list[dict]:
    return [state_to_json(s) for s in states]


def write_catalog(states, path: str | os.PathLike) -> None:
    text = json.dumps(catalog_to_json(states), indent=1) + "\n"
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CatalogIOError(f"cannot write {path}: {exc}") from exc


def read_catalog(path: str | os.PathLike) -> list[StabilizerState]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CatalogIOError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, list):
        raise SchemaError("catalog must be a JSON array")
    states = [state_from_json(obj) for obj in data]
    if len({s.group for s in states}) != len(states):
        raise InvariantViolation("catalog lists the same state twice")
    return states
