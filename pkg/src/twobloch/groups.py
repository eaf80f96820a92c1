"""Stabilizer groups of two-qubit states and their Clifford dynamics."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    AnticommutingGenerators,
    DependentGenerators,
    MinusIdentityInGroup,
    NonHermitianPauli,
    UnsupportedAngle,
)
from .pauli import IDENTITY, MINUS_IDENTITY, PauliOp, commutes, format_pauli, parse_pauli, pauli_mul


class StateClass(str, Enum):
    SEPARABLE = "Separable"
    ENTANGLED = "Entangled"

    def __str__(self) -> str:
        return self.value


def _rref(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Reduced row echelon form over GF(2); zero rows dropped."""
    rows = [list(r) for r in rows]
    out: list[list[int]] = []
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in rows if r[col]), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        for r in rows + out:
            if r[col]:
                r[:] = [a ^ b for a, b in zip(r, pivot)]
        out.append(pivot)
    return [tuple(r) for r in out]


def canonical_generators(g1: PauliOp, g2: PauliOp) -> tuple[PauliOp, PauliOp]:
    """Validate a generator pair and return its canonical reduced form.

    The bit vectors ``(x1, z1, x2, z2)`` of the two canonical generators are
    the rows of the GF(2) reduced echelon basis of the group's span; the
    signs are whatever the group assigns to those elements.
    """
    for g in (g1, g2):
        if not g.is_hermitian:
            raise NonHermitianPauli(f"generator {format_pauli(g)} is not Hermitian")
        if g == MINUS_IDENTITY:
            raise MinusIdentityInGroup("-II cannot stabilize a state")
    if g1.is_identity or g2.is_identity or g1.bits == g2.bits:
        raise DependentGenerators(f"{format_pauli(g1)} and {format_pauli(g2)} do not generate 4 elements")
    if not commutes(g1, g2):
        raise AnticommutingGenerators(f"{format_pauli(g1)} and {format_pauli(g2)} anticommute")
    g3 = pauli_mul(g1, g2)
    by_bits = {g.bits: g for g in (g1, g2, g3)}
    r1, r2 = _rref([g1.bits, g2.bits])
    return by_bits[r1], by_bits[r2]


@dataclass(frozen=True)
class StabilizerGroup:
    """The four-element abelian group ``{I, g1, g2, g1·g2}``.

    Construction validates and canonicalizes the generators, so two groups
    compare equal iff they have the same elements.
    """

    generators: tuple[PauliOp, PauliOp]
    elements: frozenset = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        g1, g2 = canonical_generators(*self.generators)
        object.__setattr__(self, "generators", (g1, g2))
        object.__setattr__(self, "elements", frozenset({IDENTITY, g1, g2, pauli_mul(g1, g2)}))

    @property
    def members(self) -> list[PauliOp]:
        """Elements in display order: identity, generators, product."""
        g1, g2 = self.generators
        return [IDENTITY, g1, g2, pauli_mul(g1, g2)]

    @property
    def nontrivial(self) -> list[PauliOp]:
        return self.members[1:]

    def sort_key(self) -> tuple:
        return tuple(g.sort_key() for g in self.generators)

    def generator_strings(self) -> list[str]:
        return [format_pauli(g) for g in self.generators]

    def __contains__(self, op: PauliOp) -> bool:
        return op in self.elements

    def __str__(self) -> str:
        return "{" + "; ".join(format_pauli(m) for m in self.members) + "}"


def group_from_generators(g1: PauliOp, g2: PauliOp) -> StabilizerGroup:
    return StabilizerGroup((g1, g2))


def group_from_strings(*texts: str) -> StabilizerGroup:
    """Convenience: ``group_from_strings("+ZI", "+IZ")`` or a comma list."""
    if len(texts) == 1:
        texts = tuple(texts[0].split(","))
    if len(texts) != 2:
        raise DependentGenerators(f"expected two generators, got {len(texts)}")
    return group_from_generators(*(parse_pauli(t) for t in texts))


def canonicalize(g: StabilizerGroup) -> StabilizerGroup:
    return StabilizerGroup(canonical_generators(*g.generators))


def classify(g: StabilizerGroup) -> StateClass:
    if any(m.weight == 1 for m in g.nontrivial):
        return StateClass.SEPARABLE
    return StateClass.ENTANGLED


@dataclass(frozen=True)
class CliffordGate:
    """Hadamard or Phase on ``qubit``, or CNOT from ``qubit`` to ``target``."""

    kind: str
    qubit: int
    target: int | None = None

    def __post_init__(self):
        if self.kind not in ("H", "S", "CNOT"):
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.qubit not in (1, 2):
            raise ValueError("qubit must be 1 or 2")
        if self.kind == "CNOT":
            if self.target not in (1, 2) or self.target == self.qubit:
                raise ValueError("CNOT needs distinct control and target in {1, 2}")
        elif self.target is not None:
            raise ValueError(f"{self.kind} takes a single qubit")

    @property
    def name(self) -> str:
        if self.kind == "CNOT":
            return f"CNOT{self.qubit}{self.target}"
        return f"{self.kind}{self.qubit}"

    def __str__(self) -> str:
        return self.name


GATES: tuple[CliffordGate, ...] = (
    CliffordGate("H", 1),
    CliffordGate("H", 2),
    CliffordGate("S", 1),
    CliffordGate("S", 2),
    CliffordGate("CNOT", 1, 2),
    CliffordGate("CNOT", 2, 1),
)
GATES_BY_NAME = {g.name: g for g in GATES}


def parse_gate(name: str) -> CliffordGate:
    try:
        return GATES_BY_NAME[name.strip().upper()]
    except KeyError:
        raise ValueError(f"unknown gate {name!r}; choose from {', '.join(GATES_BY_NAME)}") from None


def conjugate_pauli(gate: CliffordGate, p: PauliOp) -> PauliOp:
    """``U p U†`` for a Clifford gate ``U``, with exact phase."""
    phase = p.phase
    bits = {1: [p.x1, p.z1], 2: [p.x2, p.z2]}
    if gate.kind == "H":
        x, z = bits[gate.qubit]
        # H X^x Z^z H = Z^x X^z = (-1)^(xz) X^z Z^x
        bits[gate.qubit] = [z, x]
        phase += 2 * (x & z)
    elif gate.kind == "S":
        x, z = bits[gate.qubit]
        # S X S† = Y = iXZ, S Z S† = Z
        bits[gate.qubit] = [x, z ^ x]
        phase += x
    else:
        c, t = gate.qubit, gate.target
        # X_c -> X_c X_t, Z_t -> Z_c Z_t; no reordering sign in X^x Z^z form
        bits[t][0] ^= bits[c][0]
        bits[c][1] ^= bits[t][1]
    return PauliOp(phase, bits[1][0], bits[1][1], bits[2][0], bits[2][1])


def apply_clifford(gate: CliffordGate, g: StabilizerGroup) -> StabilizerGroup:
    return StabilizerGroup(tuple(conjugate_pauli(gate, m) for m in g.generators))


def _check_rotation_generator(p: PauliOp) -> None:
    if p.is_identity or not p.is_hermitian or p.sign < 0:
        raise ValueError(f"rotation generator must be one of the 15 positive Paulis, got {format_pauli(p)}")


def rotate_pauli(p: PauliOp, quarter_turns: int, q: PauliOp) -> PauliOp:
    """Conjugate ``q`` by ``exp(i·quarter_turns·π/4·p)``."""
    if quarter_turns not in (1, 2, 3):
        raise UnsupportedAngle(
            f"quarter_turns must be 1, 2 or 3 (θ = k·π/2), got {quarter_turns!r}"
        )
    if commutes(p, q):
        return q
    ip = PauliOp(p.phase + 1, *p.bits)
    for _ in range(quarter_turns):
        q = pauli_mul(ip, q)
    return q


def apply_rotation(p: PauliOp, quarter_turns: int, g: StabilizerGroup) -> StabilizerGroup:
    """Conjugate every member of ``g`` by ``exp(iθ/2·p)`` with ``θ = quarter_turns·π/2``.

    One quarter turn sends an anticommuting member ``q`` to ``i·p·q``.
    """
    _check_rotation_generator(p)
    return StabilizerGroup(tuple(rotate_pauli(p, quarter_turns, m) for m in g.generators))


UP_UP = group_from_strings("+ZI", "+IZ")
