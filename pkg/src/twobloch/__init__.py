"""Exact two-qubit stabilizer states and their two-Bloch-sphere pictures."""

from .catalog import ALIASES, StabilizerState, enumerate_catalog, resolve_state
from .frames import (
    AxisPermutation,
    EntangledFrame,
    SeparableFrame,
    SignedAxis,
    fixed_axis_pairs,
    frame_from_group,
    frame_rotation_of,
    group_from_frame,
    permute_frame,
)
from .groups import (
    GATES,
    CliffordGate,
    StabilizerGroup,
    StateClass,
    apply_clifford,
    apply_rotation,
    canonicalize,
    classify,
    group_from_generators,
)
from .oracle import (
    ExactDensity,
    ExactKet,
    apply_unitary_quarter,
    density_from_group,
    density_from_ket,
    ket_from_density,
    reduced_density_qubit1,
    stabilizer_of_ket,
    stabilizes,
)
from .pauli import PauliOp, commutes, format_pauli, parse_pauli, pauli_mul, to_dense

__version__ = "0.1.0"

__all__ = [
    "ALIASES",
    "StabilizerState",
    "enumerate_catalog",
    "resolve_state",
    "AxisPermutation",
    "EntangledFrame",
    "SeparableFrame",
    "SignedAxis",
    "fixed_axis_pairs",
    "frame_from_group",
    "frame_rotation_of",
    "group_from_frame",
    "permute_frame",
    "GATES",
    "CliffordGate",
    "StabilizerGroup",
    "StateClass",
    "apply_clifford",
    "apply_rotation",
    "canonicalize",
    "classify",
    "group_from_generators",
    "ExactDensity",
    "ExactKet",
    "apply_unitary_quarter",
    "density_from_group",
    "density_from_ket",
    "ket_from_density",
    "reduced_density_qubit1",
    "stabilizer_of_ket",
    "stabilizes",
    "PauliOp",
    "commutes",
    "format_pauli",
    "parse_pauli",
    "pauli_mul",
    "to_dense",
]
