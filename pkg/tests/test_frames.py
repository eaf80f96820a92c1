from itertools import product

import numpy as np
import pytest

from twobloch.catalog import ALIASES, lookup
from twobloch.errors import InvalidFrame
from twobloch.frames import (
    CYCLE_FIG5,
    AxisPermutation,
    EntangledFrame,
    SeparableFrame,
    SignedAxis,
    fixed_axis_pairs,
    frame_from_group,
    frame_from_json,
    frame_rotation_of,
    group_from_frame,
    permute_frame,
    rotate_frame,
    signed_permutations,
)
from twobloch.groups import apply_clifford, apply_rotation, GATES, group_from_strings
from twobloch.oracle import ExactKet
from twobloch.pauli import parse_pauli, positive_paulis

from conftest import np_pauli

A = SignedAxis.parse
FIG5_GROUP = group_from_strings("-ZY", "-YX")


def test_signed_axis_parse():
    assert A("+z") == SignedAxis("z", 1)
    assert A("-x2") == SignedAxis("x", -1)
    assert A("y") == SignedAxis("y")
    with pytest.raises(ValueError):
        A("w")


def test_frame_from_group_examples():
    assert frame_from_group(ALIASES["Psi-"]) == EntangledFrame(-np.eye(3, dtype=int))
    phi = frame_from_group(ALIASES["Phi+i"])
    assert phi == EntangledFrame([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert phi.to_json() == {"alignment": {"x1": "+y2", "y1": "+x2", "z1": "+z2"}}
    assert frame_from_group(ALIASES["up-left"]) == SeparableFrame(A("+z"), A("-x"))
    assert frame_from_group(ALIASES["up-left"]).to_json() == {"arrow1": "+z", "arrow2": "-x"}


def test_group_from_frame_examples():
    assert group_from_frame(EntangledFrame(-np.eye(3, dtype=int))) == ALIASES["Psi-"]
    assert group_from_frame(SeparableFrame(A("+z"), A("+z"))) == ALIASES["up-up"]
    with pytest.raises(InvalidFrame):
        group_from_frame(EntangledFrame(np.eye(3, dtype=int)))
    with pytest.raises(InvalidFrame):
        group_from_frame(EntangledFrame([[1, 1, 0], [0, 0, 1], [0, 0, 0]]))


def _closes_as_group(r: np.ndarray) -> bool:
    """Dense check: do the three operators read off ``r`` form a group with I?"""
    mats = []
    for p, letter in enumerate("XYZ"):
        q = int(np.flatnonzero(r[:, p])[0])
        mats.append(r[q, p] * np_pauli(letter + "XYZ"[q]))
    return np.allclose(mats[0] @ mats[1], mats[2])


def test_only_det_minus_one_alignments_are_states():
    for r in signed_permutations():
        det = round(np.linalg.det(r))
        assert _closes_as_group(r) == (det == -1)
        if det == -1:
            group_from_frame(EntangledFrame(r))
        else:
            with pytest.raises(InvalidFrame):
                group_from_frame(EntangledFrame(r))


def test_entangled_bijection(entangled):
    frames = {s.frame.alignment for s in entangled}
    want = {tuple(map(tuple, m.tolist())) for m in signed_permutations(det=-1)}
    assert len(want) == 24 and frames == want


def test_separable_bijection(separable):
    pairs = {(s.frame.arrow1, s.frame.arrow2) for s in separable}
    axes = [SignedAxis(a, s) for a in "xyz" for s in (1, -1)]
    assert pairs == set(product(axes, axes))


def test_frame_roundtrip(catalog):
    for s in catalog:
        assert group_from_frame(frame_from_group(s.group)) == s.group
        assert frame_from_json(s.frame.to_json()) == s.frame


def test_handedness(entangled, catalog):
    assert all(s.frame.det == -1 for s in entangled)
    for s in catalog:
        for gate in GATES:
            f = frame_from_group(apply_clifford(gate, s.group))
            if isinstance(f, EntangledFrame):
                assert f.det == -1


def test_cycle_parse():
    assert CYCLE_FIG5 == AxisPermutation.from_mapping({"x": A("z"), "y": A("x"), "z": A("y")})
    assert CYCLE_FIG5.det == 1
    with pytest.raises(ValueError):
        AxisPermutation.parse_cycle("x2>x2>y2")


def test_permute_frame_examples():
    psi = frame_from_group(ALIASES["Psi-"])
    assert group_from_frame(permute_frame(psi, CYCLE_FIG5)) == FIG5_GROUP
    assert permute_frame(psi, AxisPermutation.identity()) == psi
    twice = permute_frame(permute_frame(psi, CYCLE_FIG5), CYCLE_FIG5)
    assert lookup(group_from_frame(twice)).ket == ExactKet([1, -1, -1j, -1j], 4)


def test_permute_frame_errors():
    psi = frame_from_group(ALIASES["Psi-"])
    swap = AxisPermutation.from_mapping({"x": A("y"), "y": A("x"), "z": A("z")})
    with pytest.raises(InvalidFrame):
        permute_frame(psi, swap)
    with pytest.raises(InvalidFrame):
        permute_frame(frame_from_group(ALIASES["up-up"]), CYCLE_FIG5)
    with pytest.raises(InvalidFrame):
        AxisPermutation([[1, 1, 0], [0, 0, 1], [0, 0, 0]])


def test_frame_rotation_examples():
    r = frame_rotation_of(parse_pauli("IY"), 1)
    assert (r.sphere, r.plane) == (2, ("z2", "x2"))
    r = frame_rotation_of(parse_pauli("ZI"), 1)
    assert (r.sphere, r.plane) == (1, ("x1", "y1"))
    r = frame_rotation_of(parse_pauli("XY"), 1)
    assert not r.local and r.axes == ("x1", "y2")


def test_z1_rotation_cross_check_on_separable(separable):
    rot = frame_rotation_of(parse_pauli("ZI"), 1)
    for s in separable:
        moved = frame_from_group(apply_rotation(parse_pauli("ZI"), 1, s.group))
        assert rotate_frame(s.frame, rot) == moved
        # plane (x1, y1): arrows along ±z1 are untouched, x1 goes where y1 was
        if s.frame.arrow1.axis == "z":
            assert moved.arrow1 == s.frame.arrow1


def test_local_rotation_consistency(catalog):
    local = [p for p in positive_paulis() if p.weight == 1]
    assert len(local) == 6
    for s in catalog:
        for p, turns in product(local, (1, 2, 3)):
            assert rotate_frame(s.frame, frame_rotation_of(p, turns)) == frame_from_group(
                apply_rotation(p, turns, s.group)
            )


def test_fixed_axis_pairs_examples():
    assert set(fixed_axis_pairs(FIG5_GROUP)) == {("z1", "-y2"), ("y1", "-x2"), ("x1", "-z2")}
    assert set(fixed_axis_pairs(ALIASES["up-left"])) == {("z1",), ("-x2",), ("z1", "-x2")}
    assert set(fixed_axis_pairs(ALIASES["up-up"])) == {("z1",), ("z2",), ("z1", "z2")}


def test_fixed_axis_pairs_sound(catalog):
    for s in catalog:
        for m in s.group.nontrivial:
            for turns in (1, 2, 3):
                assert apply_rotation(m.positive(), turns, s.group) == s.group


def test_cycle_is_two_sphere2_quarter_turns(entangled):
    locals2 = [p for p in positive_paulis() if p.letters[0] == "I"]
    found = []
    for (p1, t1), (p2, t2) in product(product(locals2, (1, 2, 3)), repeat=2):
        if all(
            apply_rotation(p2, t2, apply_rotation(p1, t1, s.group))
            == group_from_frame(permute_frame(s.frame, CYCLE_FIG5))
            for s in entangled
        ):
            found.append((str(p1), t1, str(p2), t2))
    assert found
    # both steps are genuine quarter turns about different sphere-2 axes
    assert all(t1 in (1, 3) and t2 in (1, 3) and a != b for a, t1, b, t2 in found)


@pytest.mark.parametrize(
    "data",
    [
        {"arrow1": "+z"},
        {"alignment": {"x1": "+y2", "y1": "+y2", "z1": "+z2"}},
        {"alignment": {"x1": "+y1", "y1": "+x2", "z1": "+z2"}},
        [],
    ],
)
def test_frame_from_json_rejects(data):
    with pytest.raises(ValueError):
        frame_from_json(data)
