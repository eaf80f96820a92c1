"""Exhaustive invariant checks, run by ``twobloch verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable


from .catalog import enumerate_catalog, replay, shortest_gate_path, state_index
from .exact import GaussArray
from .frames import (
    CYCLE_FIG5,
    EntangledFrame,
    SeparableFrame,
    fixed_axis_pairs,
    frame_from_group,
    frame_rotation_of,
    group_from_frame,
    permute_frame,
    rotate_frame,
    signed_permutations,
)
from .groups import GATES, StateClass, apply_clifford, apply_rotation, classify
from .oracle import (
    apply_unitary_quarter,
    density_from_group,
    density_from_ket,
    ket_from_density,
    reduced_density_qubit1,
    stabilizer_of_ket,
    stabilizes,
)
from .pauli import IDENTITY, commutes, hermitian_paulis, parse_pauli, pauli_mul, positive_paulis, to_dense
from .render import SceneSpec, render_svg


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _pauli_dense() -> str:
    ops = hermitian_paulis(include_identity=True)
    for a, b in product(ops, ops):
        if to_dense(pauli_mul(a, b)) != to_dense(a) @ to_dense(b):
            return f"dense product mismatch for {a}·{b}"
        da, db = to_dense(a), to_dense(b)
        if commutes(a, b) != (da @ db == db @ da):
            return f"commutation mismatch for {a}, {b}"
        if commutes(a, b) and not pauli_mul(a, b).is_hermitian:
            return f"product of commuting {a}, {b} not Hermitian"
    return ""


def _pauli_assoc() -> str:
    ops = hermitian_paulis(include_identity=True)
    for a in ops:
        if pauli_mul(IDENTITY, a) != a or pauli_mul(a, IDENTITY) != a:
            return f"identity fails on {a}"
        for b, c in product(ops, ops):
            if pauli_mul(pauli_mul(a, b), c) != pauli_mul(a, pauli_mul(b, c)):
                return f"associativity fails on {a}, {b}, {c}"
    return ""


def _group_invariants() -> str:
    for s in enumerate_catalog():
        els = s.group.elements
        if len(els) != 4 or IDENTITY not in els or parse_pauli("-II") in els:
            return f"state {s.id}: bad element set"
        if not all(a.is_hermitian and commutes(a, b) for a in els for b in els):
            return f"state {s.id}: not abelian/Hermitian"
    return ""


def _clifford_bijection() -> str:
    index = state_index()
    for gate in GATES:
        images = {apply_clifford(gate, g) for g in index}
        if images != set(index):
            return f"{gate} does not permute the catalog"
    return ""


def _rotation_closure() -> str:
    index = state_index()
    seen = {next(iter(index))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for p in positive_paulis():
                h = apply_rotation(p, 1, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return "" if seen == set(index) else f"quarter turns reach {len(seen)} states"


def _group_sum_identity() -> str:
    for s in enumerate_catalog():
        rho = density_from_group(s.group)
        if rho != density_from_ket(s.ket):
            return f"state {s.id}: group sum differs from |ψ⟩⟨ψ|"
        if not (rho.is_hermitian() and rho.has_unit_trace() and rho.is_idempotent()):
            return f"state {s.id}: density is not a pure state"
    return ""


def _eigen_equations() -> str:
    ops = hermitian_paulis(include_identity=True)
    for s in enumerate_catalog():
        for m in ops:
            if stabilizes(m, s.ket) != (m in s.group):
                return f"state {s.id}: stabilizes({m}) wrong"
    return ""


def _roundtrip() -> str:
    for s in enumerate_catalog():
        if stabilizer_of_ket(ket_from_density(density_from_group(s.group))) != s.group:
            return f"state {s.id}: group → ρ → ket → group roundtrip failed"
    return ""


def _reduced_density() -> str:
    for s in enumerate_catalog():
        red = reduced_density_qubit1(density_from_group(s.group))
        mixed = red.denom == 2 and red.entries == GaussArray.identity(2)
        if mixed != (classify(s.group) is StateClass.ENTANGLED):
            return f"state {s.id}: reduced density disagrees with classification"
    return ""


def _frame_bijections() -> str:
    cat = enumerate_catalog()
    ent = {s.frame.alignment for s in cat if isinstance(s.frame, EntangledFrame)}
    want = {tuple(map(tuple, m.tolist())) for m in signed_permutations(det=-1)}
    if ent != want or len(want) != 24:
        return "entangled frames are not the 24 det -1 signed permutations"
    sep = {(s.frame.arrow1, s.frame.arrow2) for s in cat if isinstance(s.frame, SeparableFrame)}
    if len(sep) != 36:
        return f"{len(sep)} distinct separable arrow pairs"
    for s in cat:
        if group_from_frame(frame_from_group(s.group)) != s.group:
            return f"state {s.id}: frame roundtrip failed"
    return ""


def _tableau_vs_oracle() -> str:
    for s in enumerate_catalog():
        for p in positive_paulis():
            ket = s.ket
            for turns in (1, 2, 3):
                ket = apply_unitary_quarter(p, ket)
                if apply_rotation(p, turns, s.group) != stabilizer_of_ket(ket.canonical()):
                    return f"state {s.id}, {p}, {turns} turns: tableau and dense disagree"
    return ""


def _local_rotation_frames() -> str:
    locals_ = [p for p in positive_paulis() if p.weight == 1]
    for s in enumerate_catalog():
        for p in locals_:
            for turns in (1, 2, 3):
                moved = rotate_frame(s.frame, frame_rotation_of(p, turns))
                if moved != frame_from_group(apply_rotation(p, turns, s.group)):
                    return f"state {s.id}, {p}, {turns} turns: frame rotation disagrees"
    return ""


def _handedness() -> str:
    for s in enumerate_catalog():
        for gate in GATES:
            f = frame_from_group(apply_clifford(gate, s.group))
            if isinstance(f, EntangledFrame) and f.det != -1:
                return f"{gate} on state {s.id} gives det {f.det}"
    return ""


def _fixed_pairs() -> str:
    for s in enumerate_catalog():
        pairs = fixed_axis_pairs(s.group)
        if len(pairs) != 3:
            return f"state {s.id}: {len(pairs)} fixed pairs"
        for m in s.group.nontrivial:
            for turns in (1, 2, 3):
                if apply_rotation(m.positive(), turns, s.group) != s.group:
                    return f"state {s.id}: rotating about {m} moved the state"
    return ""


def _cube_rotation() -> str:
    ent = [s for s in enumerate_catalog() if isinstance(s.frame, EntangledFrame)]
    locals2 = [p for p in positive_paulis() if p.letters[0] == "I"]
    for (p1, t1), (p2, t2) in product(product(locals2, (1, 2, 3)), repeat=2):
        if all(
            apply_rotation(p2, t2, apply_rotation(p1, t1, s.group))
            == group_from_frame(permute_frame(s.frame, CYCLE_FIG5))
            for s in ent
        ):
            return ""
    return "no pair of sphere-2 quarter turns reproduces the axis cycle"


def _render() -> str:
    for s in enumerate_catalog():
        svg = render_svg(SceneSpec(s.frame))
        if svg != render_svg(SceneSpec(s.frame)):
            return f"state {s.id}: non-deterministic render"
        arrows, dots = svg.count('class="statevector"'), svg.count('class="center-dot"')
        want = (2, 0) if isinstance(s.frame, SeparableFrame) else (0, 2)
        if (arrows, dots) != want:
            return f"state {s.id}: {arrows} arrows, {dots} dots"
    return ""


def _paths(seed: int, pairs: int = 100) -> Callable[[], str]:
    def check() -> str:
        rng = random.Random(seed)
        groups = [s.group for s in enumerate_catalog()]
        for _ in range(pairs):
            a, b = rng.choice(groups), rng.choice(groups)
            if replay(a, shortest_gate_path(a, b)) != b:
                return f"path {a} → {b} does not replay"
        return ""

    return check


def run_checks(seed: int = 0) -> list[CheckResult]:
    checks: list[tuple[str, Callable[[], str]]] = [
        ("pauli: dense products and commutation", _pauli_dense),
        ("pauli: associativity and identity", _pauli_assoc),
        ("groups: closed, abelian, Hermitian, no -II", _group_invariants),
        ("groups: every gate permutes the catalog", _clifford_bijection),
        ("groups: quarter turns reach the same 60 states", _rotation_closure),
        ("oracle: group sum equals |ψ⟩⟨ψ|", _group_sum_identity),
        ("oracle: eigen-equations for all 32 signed Paulis", _eigen_equations),
        ("oracle: group → ket → group roundtrip", _roundtrip),
        ("oracle: reduced state maximally mixed iff entangled", _reduced_density),
        ("oracle: tableau rotations match dense unitaries", _tableau_vs_oracle),
        ("frames: bijections and roundtrip", _frame_bijections),
        ("frames: local rotations commute with the map", _local_rotation_frames),
        ("frames: handedness preserved by gates", _handedness),
        ("frames: fixed axis pairs leave state unchanged", _fixed_pairs),
        ("frames: axis cycle is two sphere-2 quarter turns", _cube_rotation),
        ("render: deterministic, arrow/dot counts", _render),
        (f"cli: 100 random shortest paths replay (seed {seed})", _paths(seed)),
    ]
    results = []
    for name, fn in checks:
        try:
            detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crash of verify
            detail = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, not detail, detail))
    return results
