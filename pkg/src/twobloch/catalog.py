"""The 60 two-qubit stabilizer states, enumerated by breadth-first search.

The search carries two descriptions side by side: the stabilizer group is
updated by tableau conjugation and the ket by dense gate matrices.  The two
are never derived from one another, which keeps the catalog useful as a
cross-check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .frames import FrameRep, frame_from_group
from .groups import (
    GATES,
    UP_UP,
    CliffordGate,
    StabilizerGroup,
    StateClass,
    apply_clifford,
    classify,
    group_from_strings,
)
from .oracle import KET_UP_UP, ExactKet, apply_gate_to_ket

ALIASES: dict[str, StabilizerGroup] = {
    "up-up": UP_UP,
    "up-left": group_from_strings("+ZI", "-IX"),
    "Psi-": group_from_strings("-ZZ", "-XX"),
    "Phi+i": group_from_strings("+ZZ", "+XY"),
}


@dataclass(frozen=True)
class StabilizerState:
    id: int
    group: StabilizerGroup
    state_class: StateClass
    ket: ExactKet
    frame: FrameRep


def _bfs() -> list[tuple[StabilizerGroup, ExactKet]]:
    seen = {UP_UP: KET_UP_UP}
    order = [UP_UP]
    layer = [UP_UP]
    while layer:
        found: dict[StabilizerGroup, ExactKet] = {}
        for g in layer:
            for gate in GATES:
                h = apply_clifford(gate, g)
                if h not in seen and h not in found:
                    found[h] = apply_gate_to_ket(gate, seen[g])
        layer = sorted(found, key=StabilizerGroup.sort_key)
        for h in layer:
            seen[h] = found[h]
        order.extend(layer)
    return [(g, seen[g]) for g in order]


@lru_cache(maxsize=1)
def _catalog() -> tuple[StabilizerState, ...]:
    return tuple(
        StabilizerState(i, g, classify(g), ket, frame_from_group(g))
        for i, (g, ket) in enumerate(_bfs())
    )


def enumerate_catalog() -> list[StabilizerState]:
    """All 60 states in BFS-layer order from ``|↑↑⟩``, ties broken canonically."""
    return list(_catalog())


def state_index() -> dict[StabilizerGroup, StabilizerState]:
    return {s.group: s for s in _catalog()}


def lookup(group: StabilizerGroup) -> StabilizerState:
    return state_index()[group]


def resolve_state(token: str) -> StabilizerState:
    """Catalog id, alias (``up-up``, ``Psi-``, ...) or ``"+ZI,+IZ"`` generators."""
    token = token.strip()
    if token.isdigit():
        idx = int(token)
        cat = _catalog()
        if not 0 <= idx < len(cat):
            raise ValueError(f"state id {idx} out of range 0..{len(cat) - 1}")
        return cat[idx]
    if token in ALIASES:
        return lookup(ALIASES[token])
    if "," in token:
        return lookup(group_from_strings(token))
    raise ValueError(f"unknown state {token!r}: use an id, an alias ({', '.join(ALIASES)}) or 'G1,G2'")


def shortest_gate_path(source: StabilizerGroup, target: StabilizerGroup) -> list[CliffordGate]:
    """Fewest gates from ``source`` to ``target``; gate order breaks ties."""
    prev: dict[StabilizerGroup, tuple[StabilizerGroup, CliffordGate] | None] = {source: None}
    queue = deque([source])
    while queue:
        g = queue.popleft()
        if g == target:
            break
        for gate in GATES:
            h = apply_clifford(gate, g)
            if h not in prev:
                prev[h] = (g, gate)
                queue.append(h)
    if target not in prev:
        raise ValueError("target is not reachable")
    path: list[CliffordGate] = []
    node = target
    while prev[node] is not None:
        node, gate = prev[node]
        path.append(gate)
    return path[::-1]


def replay(source: StabilizerGroup, gates: list[CliffordGate]) -> StabilizerGroup:
    g = source
    for gate in gates:
        g = apply_clifford(gate, g)
    return g
