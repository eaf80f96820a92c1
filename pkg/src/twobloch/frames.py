"""Two-Bloch-sphere pictures of stabilizer groups.

Separable states are drawn with a statevector arrow on each sphere; only the
signed axis lying along each arrow is physical.  Maximally entangled states
are drawn with a dot at each centre and a relative orientation of the two
coordinate frames.  The orientation is recorded as a 3×3 signed permutation
``R`` with ``R[q, p] = s`` meaning axis ``p`` of sphere 1 points the same way
as ``s·q`` of sphere 2 (rows: sphere-2 axes, columns: sphere-1 axes).

A member ``s·P⊗Q`` of the group reads "``p₁`` is co-directional with ``s·q₂``";
a member ``s·P⊗I`` reads "``s·p₁`` lies along the arrow of sphere 1".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InvalidFrame
from .groups import StabilizerGroup, StateClass, classify, group_from_generators
from .pauli import AXIS_LETTER, LETTER_AXIS, PauliOp, pauli_mul

AXES = ("x", "y", "z")
AXIS_INDEX = {a: i for i, a in enumerate(AXES)}
_SIGNED_RE = re.compile(r"^\s*([+\-−]?)([xyz])([12]?)\s*$")


@dataclass(frozen=True)
class SignedAxis:
    axis: str
    sign: int = 1

    def __post_init__(self):
        if self.axis not in AXIS_INDEX or self.sign not in (1, -1):
            raise ValueError(f"bad signed axis {self.sign}, {self.axis!r}")

    @classmethod
    def parse(cls, text: str) -> SignedAxis:
        m = _SIGNED_RE.match(text)
        if not m:
            raise ValueError(f"malformed signed axis {text!r}")
        return cls(m.group(2), -1 if m.group(1) in ("-", "−") else 1)

    @property
    def index(self) -> int:
        return AXIS_INDEX[self.axis]

    def vector(self) -> np.ndarray:
        v = np.zeros(3, dtype=int)
        v[self.index] = self.sign
        return v

    def label(self, sphere: int | None = None) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.axis}{sphere or ''}"

    def __neg__(self) -> SignedAxis:
        return SignedAxis(self.axis, -self.sign)

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class SeparableFrame:
    arrow1: SignedAxis
    arrow2: SignedAxis

    def to_json(self) -> dict:
        return {"arrow1": str(self.arrow1), "arrow2": str(self.arrow2)}


@dataclass(frozen=True)
class EntangledFrame:
    alignment: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        m = np.asarray(self.alignment, dtype=int)
        object.__setattr__(self, "alignment", tuple(tuple(int(v) for v in row) for row in m))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.alignment, dtype=int)

    @property
    def det(self) -> int:
        return int(round(np.linalg.det(self.matrix)))

    def partner(self, p: str) -> SignedAxis:
        """Sphere-2 signed axis co-directional with sphere-1 axis ``p``."""
        col = self.matrix[:, AXIS_INDEX[p]]
        q = int(np.flatnonzero(col)[0])
        return SignedAxis(AXES[q], int(col[q]))

    def to_json(self) -> dict:
        return {"alignment": {f"{p}1": self.partner(p).label(2) for p in AXES}}


FrameRep = Union[SeparableFrame, EntangledFrame]


def is_signed_permutation(m: np.ndarray) -> bool:
    m = np.asarray(m)
    if m.shape != (3, 3) or not np.all(np.isin(m, (-1, 0, 1))):
        return False
    return bool(np.all(np.abs(m).sum(axis=0) == 1) and np.all(np.abs(m).sum(axis=1) == 1))


def signed_permutations(det: int | None = None) -> list[np.ndarray]:
    """All 48 signed 3×3 permutation matrices, optionally filtered by determinant."""
    from itertools import permutations, product

    out = []
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            m = np.zeros((3, 3), dtype=int)
            for col, (row, s) in enumerate(zip(perm, signs)):
                m[row, col] = s
            if det is None or round(np.linalg.det(m)) == det:
                out.append(m)
    return out


def frame_from_group(g: StabilizerGroup) -> FrameRep:
    if classify(g) is StateClass.SEPARABLE:
        arrows: dict[int, SignedAxis] = {}
        for m in g.nontrivial:
            a, b = m.letters
            if b == "I":
                arrows[1] = SignedAxis(LETTER_AXIS[a], m.sign)
            elif a == "I":
                arrows[2] = SignedAxis(LETTER_AXIS[b], m.sign)
        return SeparableFrame(arrows[1], arrows[2])
    r = np.zeros((3, 3), dtype=int)
    for m in g.nontrivial:
        a, b = m.letters
        r[AXIS_INDEX[LETTER_AXIS[b]], AXIS_INDEX[LETTER_AXIS[a]]] = m.sign
    return EntangledFrame(r)


def group_from_frame(f: FrameRep) -> StabilizerGroup:
    if isinstance(f, SeparableFrame):
        g1 = PauliOp.from_letters(AXIS_LETTER[f.arrow1.axis], "I", f.arrow1.sign)
        g2 = PauliOp.from_letters("I", AXIS_LETTER[f.arrow2.axis], f.arrow2.sign)
        return group_from_generators(g1, g2)
    r = f.matrix
    if not is_signed_permutation(r):
        raise InvalidFrame(f"alignment {r.tolist()} is not a signed permutation")
    if f.det != -1:
        raise InvalidFrame("alignment must have det -1: the second frame has opposite handedness")
    members = []
    for p in AXES:
        q = f.partner(p)
        members.append(PauliOp.from_letters(AXIS_LETTER[p], AXIS_LETTER[q.axis], q.sign))
    g = group_from_generators(members[0], members[1])
    # guaranteed by det -1; kept as a guard against a wrong convention
    if pauli_mul(members[0], members[1]) != members[2]:
        raise InvalidFrame("alignment is not consistent with a stabilizer group")
    return g


@dataclass(frozen=True)
class AxisPermutation:
    """Signed relabeling of sphere-2 axes, ``matrix[new, old] = sign``.

    The label that used to sit at ``old`` is replaced by ``sign·new``.
    """

    matrix: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=int)
        if not is_signed_permutation(m):
            raise InvalidFrame(f"{m.tolist()} is not a signed permutation")
        object.__setattr__(self, "matrix", tuple(tuple(int(v) for v in row) for row in m))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=int)

    @property
    def det(self) -> int:
        return int(round(np.linalg.det(self.array)))

    @classmethod
    def identity(cls) -> AxisPermutation:
        return cls(np.eye(3, dtype=int))

    @classmethod
    def from_mapping(cls, mapping: dict[str, SignedAxis]) -> AxisPermutation:
        m = np.zeros((3, 3), dtype=int)
        for old, new in mapping.items():
            m[new.index, AXIS_INDEX[old]] = new.sign
        return cls(m)

    @classmethod
    def parse_cycle(cls, text: str) -> AxisPermutation:
        """Parse cycle notation like ``"x2>z2>y2>x2"`` (each label moves to the next)."""
        labels = [SignedAxis.parse(t) for t in text.split(">")]
        if len(labels) > 1 and labels[0] == labels[-1]:
            labels = labels[:-1]
        if any(lab.sign < 0 for lab in labels) or len({lab.axis for lab in labels}) != len(labels):
            raise ValueError(f"malformed axis cycle {text!r}")
        mapping = {a: SignedAxis(a) for a in AXES}
        for old, new in zip(labels, labels[1:] + labels[:1]):
            mapping[old.axis] = new
        return cls.from_mapping(mapping)


CYCLE_FIG5 = AxisPermutation.parse_cycle("x2>z2>y2>x2")


def permute_frame(f: FrameRep, perm: AxisPermutation) -> EntangledFrame:
    if not isinstance(f, EntangledFrame):
        raise InvalidFrame("axis permutation needs an entangled frame")
    if perm.det != 1:
        raise InvalidFrame("permutation with det -1 would flip the second frame's handedness")
    return EntangledFrame(perm.array @ f.matrix)


@dataclass(frozen=True)
class FrameRotation:
    """What a quarter-turn rotation generated by a Pauli does to the picture.

    Local rotations turn the plane ``(a, b)`` of one sphere by
    ``quarter_turns·π/2``, carrying ``a`` onto where ``b`` was.  Non-local
    generators only name the sphere-1 and sphere-2 axes they couple.
    """

    quarter_turns: int
    sphere: int | None
    plane: tuple[str, str] | None = None
    axes: tuple[str, str] | None = None

    @property
    def local(self) -> bool:
        return self.sphere is not None

    def relabeling(self) -> np.ndarray:
        """Signed permutation (new label ← old label) for a local rotation."""
        if not self.local:
            raise ValueError("non-local rotations have no single-sphere relabeling")
        a, b = (AXIS_INDEX[s[0]] for s in self.plane)
        one = np.eye(3, dtype=int)
        # after one turn: label a sits where -b was, label b sits where a was
        one[a, a] = one[b, b] = 0
        one[b, a] = -1
        one[a, b] = 1
        return np.linalg.matrix_power(one, self.quarter_turns)

    def describe(self) -> str:
        if self.local:
            return f"sphere {self.sphere}: rotate plane ({self.plane[0]}, {self.plane[1]}) by {self.quarter_turns}·π/2"
        return f"non-local: couples {self.axes[0]} and {self.axes[1]} ({self.quarter_turns}·π/2)"


def frame_rotation_of(p: PauliOp, quarter_turns: int) -> FrameRotation:
    if p.is_identity or not p.is_hermitian or p.sign < 0:
        raise ValueError(f"expected one of the 15 positive Paulis, got {p}")
    a, b = p.letters
    if b == "I" or a == "I":
        sphere = 1 if b == "I" else 2
        k = AXIS_INDEX[LETTER_AXIS[a if sphere == 1 else b]]
        plane = tuple(f"{AXES[(k + d) % 3]}{sphere}" for d in (1, 2))
        return FrameRotation(quarter_turns, sphere, plane=plane)
    return FrameRotation(quarter_turns, None, axes=(f"{LETTER_AXIS[a]}1", f"{LETTER_AXIS[b]}2"))


def _relabel_axis(m: np.ndarray, s: SignedAxis) -> SignedAxis:
    v = m @ s.vector()
    q = int(np.flatnonzero(v)[0])
    return SignedAxis(AXES[q], int(v[q]))


def rotate_frame(f: FrameRep, rot: FrameRotation) -> FrameRep:
    """Apply a local rotation to the picture (passive: the axes move)."""
    m = rot.relabeling()
    if isinstance(f, SeparableFrame):
        if rot.sphere == 1:
            return SeparableFrame(_relabel_axis(m, f.arrow1), f.arrow2)
        return SeparableFrame(f.arrow1, _relabel_axis(m, f.arrow2))
    if rot.sphere == 2:
        return EntangledFrame(m @ f.matrix)
    return EntangledFrame(f.matrix @ m.T)


def fixed_axis_pairs(g: StabilizerGroup) -> list[tuple[str, ...]]:
    """Axes (or axis pairs) whose simultaneous rotation leaves the state alone.

    ``s·P⊗Q`` gives ``("p1", "±q2")``; ``s·P⊗I`` gives ``("±p1",)``;
    ``s·I⊗Q`` gives ``("±q2",)``.
    """
    out: list[tuple[str, ...]] = []
    for m in g.nontrivial:
        a, b = m.letters
        if b == "I":
            out.append((SignedAxis(LETTER_AXIS[a], m.sign).label(1).lstrip("+"),))
        elif a == "I":
            out.append((SignedAxis(LETTER_AXIS[b], m.sign).label(2).lstrip("+"),))
        else:
            out.append((f"{LETTER_AXIS[a]}1", SignedAxis(LETTER_AXIS[b], m.sign).label(2).lstrip("+")))
    return out


def frame_to_json(f: FrameRep) -> dict:
    return f.to_json()


def frame_from_json(data) -> FrameRep:
    if not isinstance(data, dict):
        raise ValueError("frame must be an object")
    if set(data) == {"arrow1", "arrow2"}:
        return SeparableFrame(SignedAxis.parse(data["arrow1"]), SignedAxis.parse(data["arrow2"]))
    if set(data) == {"alignment"} and isinstance(data["alignment"], dict):
        al = data["alignment"]
        if set(al) != {"x1", "y1", "z1"}:
            raise ValueError("alignment needs keys x1, y1, z1")
        r = np.zeros((3, 3), dtype=int)
        for key, val in al.items():
            m = _SIGNED_RE.match(val)
            if not m or m.group(3) != "2":
                raise ValueError(f"alignment value {val!r} must name a sphere-2 axis")
            q = SignedAxis.parse(val)
            if r[q.index].any():
                raise ValueError("alignment repeats a sphere-2 axis")
            r[q.index, AXIS_INDEX[key[0]]] = q.sign
        return EntangledFrame(r)
    raise ValueError(f"unrecognised frame object with keys {sorted(data)}")
