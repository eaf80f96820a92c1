"""Dense exact linear algebra used as an independent check on the tableau code.

Kets and density matrices carry Gaussian-integer entries plus an integer
normalization, so every comparison here is an exact equality.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NotPure, NotStabilizerState
from .exact import GaussArray, format_gauss_array
from .groups import CliffordGate, StabilizerGroup, group_from_generators
from .pauli import PauliOp, hermitian_paulis, to_dense


class ExactKet:
    """State vector ``amplitudes / sqrt(norm_sq)``.

    Catalog kets always have ``norm_sq`` in {1, 2, 4}; the class itself
    accepts any positive integer so that non-stabilizer inputs such as
    ``(2, 1, 0, 0)/√5`` can be represented and rejected downstream.
    """

    __slots__ = ("amplitudes", "norm_sq")

    def __init__(self, amplitudes, norm_sq: int | None = None):
        if not isinstance(amplitudes, GaussArray):
            amplitudes = GaussArray.from_complex(amplitudes)
        if amplitudes.shape != (4,):
            raise ValueError(f"two-qubit ket needs 4 amplitudes, got shape {amplitudes.shape}")
        total = int(amplitudes.abs_sq().sum())
        if norm_sq is None:
            norm_sq = total
        if total == 0 or total != norm_sq:
            raise ValueError(f"sum of |amplitude|^2 is {total}, expected norm_sq={norm_sq}")
        self.amplitudes = amplitudes
        self.norm_sq = int(norm_sq)

    def canonical(self) -> ExactKet:
        """Same ray with first nonzero amplitude positive real and coprime entries."""
        a = self.amplitudes
        k = next(i for i in range(4) if a.re[i] or a.im[i])
        scaled = a * complex(int(a.re[k]), -int(a.im[k]))
        return ExactKet(scaled.floordiv_exact(scaled.content()))

    def same_state(self, other: ExactKet) -> bool:
        return density_from_ket(self) == density_from_ket(other)

    def to_complex(self) -> np.ndarray:
        return self.amplitudes.to_complex() / math.sqrt(self.norm_sq)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactKet):
            return NotImplemented
        return self.norm_sq == other.norm_sq and self.amplitudes == other.amplitudes

    def __hash__(self) -> int:
        return hash((self.norm_sq, self.amplitudes))

    def __repr__(self) -> str:
        return f"ExactKet({format_gauss_array(self.amplitudes)}, norm_sq={self.norm_sq})"

    def __str__(self) -> str:
        root = "" if self.norm_sq == 1 else f"/√{self.norm_sq}"
        if self.norm_sq == 4:
            root = "/2"
        return f"({', '.join(format_gauss_array(self.amplitudes[i]) for i in range(4))}){root}"


class ExactDensity:
    """Matrix ``entries / denom`` kept in lowest terms."""

    __slots__ = ("entries", "denom")

    def __init__(self, entries, denom: int = 1):
        if not isinstance(entries, GaussArray):
            entries = GaussArray.from_complex(entries)
        if denom <= 0:
            raise ValueError("denominator must be positive")
        g = math.gcd(entries.content(), int(denom))
        self.entries = entries.floordiv_exact(g)
        self.denom = int(denom) // g

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def is_hermitian(self) -> bool:
        return self.entries == self.entries.dagger()

    def has_unit_trace(self) -> bool:
        return self.entries.trace() == self.denom

    def is_idempotent(self) -> bool:
        # (E/D)^2 == E/D  <=>  E·E == D·E
        return self.entries @ self.entries == self.entries * self.denom

    def __matmul__(self, other: ExactDensity) -> ExactDensity:
        return ExactDensity(self.entries @ other.entries, self.denom * other.denom)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactDensity):
            return NotImplemented
        return self.denom == other.denom and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.denom, self.entries))

    def to_complex(self) -> np.ndarray:
        return self.entries.to_complex() / self.denom

    def __repr__(self) -> str:
        return f"ExactDensity({format_gauss_array(self.entries)}, denom={self.denom})"

    def __str__(self) -> str:
        rows = [
            "[" + ", ".join(format_gauss_array(self.entries[r, c]) for c in range(self.dim)) + "]"
            for r in range(self.dim)
        ]
        prefix = "" if self.denom == 1 else f"(1/{self.denom})·"
        return prefix + "[" + ", ".join(rows) + "]"


def density_from_group(g: StabilizerGroup) -> ExactDensity:
    """``ρ = (1/4) Σ_{M ∈ S} M``."""
    total = GaussArray.zeros((4, 4))
    for m in g.members:
        total = total + to_dense(m)
    return ExactDensity(total, 4)


def density_from_ket(k: ExactKet) -> ExactDensity:
    return ExactDensity(k.amplitudes.outer(k.amplitudes), k.norm_sq)


def ket_from_density(d: ExactDensity) -> ExactKet:
    """Rank-1 projector to its ket, phase fixed by :meth:`ExactKet.canonical`."""
    if d.dim != 4 or not (d.is_hermitian() and d.has_unit_trace() and d.is_idempotent()):
        raise NotPure("density matrix is not a rank-1 projector")
    diag = d.entries.re.diagonal()
    j = int(np.flatnonzero(diag)[0])
    # column j of |v⟩⟨v| is v·conj(v_j), i.e. proportional to v
    ket = ExactKet(d.entries[:, j]).canonical()
    if density_from_ket(ket) != d:
        raise NotPure("density matrix is not a rank-1 projector")
    return ket


def stabilizes(m: PauliOp, k: ExactKet) -> bool:
    return to_dense(m) @ k.amplitudes == k.amplitudes


def stabilizer_of_ket(k: ExactKet) -> StabilizerGroup:
    """Brute-force scan of the 30 signed non-identity Paulis."""
    found = [m for m in hermitian_paulis() if stabilizes(m, k)]
    if len(found) != 3:
        raise NotStabilizerState(f"{len(found)} signed Paulis stabilize {k}; a stabilizer state has 3")
    return group_from_generators(found[0], found[1])


def apply_unitary_quarter(p: PauliOp, k: ExactKet) -> ExactKet:
    """Exact ``(I + i·p)/√2`` applied to ``k`` (no phase normalization)."""
    if p.is_identity or not p.is_hermitian or p.sign < 0:
        raise ValueError(f"expected one of the 15 positive Paulis, got {p}")
    a = k.amplitudes
    return ExactKet(a + (to_dense(p) @ a).times_i(), 2 * k.norm_sq)


def reduced_density_qubit1(d: ExactDensity) -> ExactDensity:
    """Partial trace over qubit 2."""
    e = d.entries
    rows = [[e[2 * a, 2 * b] + e[2 * a + 1, 2 * b + 1] for b in range(2)] for a in range(2)]
    re = [[int(x.re) for x in row] for row in rows]
    im = [[int(x.im) for x in row] for row in rows]
    return ExactDensity(GaussArray(re, im), d.denom)


_H = GaussArray.from_complex([[1, 1], [1, -1]])
_S = GaussArray.from_complex([[1, 0], [0, 1j]])
_I2 = GaussArray.identity(2)
_CNOT12 = GaussArray.from_complex(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
)
_CNOT21 = GaussArray.from_complex(
    [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]]
)


def gate_matrix(gate: CliffordGate) -> tuple[GaussArray, int]:
    """Dense gate as ``(M, f)`` with unitary ``M/sqrt(f)``."""
    if gate.kind == "CNOT":
        return (_CNOT12 if gate.qubit == 1 else _CNOT21), 1
    single, factor = (_H, 2) if gate.kind == "H" else (_S, 1)
    mat = single.kron(_I2) if gate.qubit == 1 else _I2.kron(single)
    return mat, factor


def apply_gate_to_ket(gate: CliffordGate, k: ExactKet) -> ExactKet:
    mat, factor = gate_matrix(gate)
    return ExactKet(mat @ k.amplitudes, k.norm_sq * factor).canonical()


KET_UP_UP = ExactKet([1, 0, 0, 0])
