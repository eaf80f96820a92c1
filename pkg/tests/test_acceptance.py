"""Exit criteria.  ``pytest tests/test_acceptance.py`` prints one line per criterion.

Every check is exact (zero tolerance) except criterion 1's < 1 s timing bound.
Also runnable directly: ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import time
from itertools import product
from pathlib import Path

import numpy as np
import pytest

from twobloch import catalog as catalog_mod
from twobloch.catalog import ALIASES, enumerate_catalog, lookup
from twobloch.frames import (
    CYCLE_FIG5,
    EntangledFrame,
    SeparableFrame,
    SignedAxis,
    frame_from_group,
    group_from_frame,
    permute_frame,
    signed_permutations,
)
from twobloch.groups import GATES, StateClass, apply_clifford, apply_rotation
from twobloch.oracle import (
    ExactDensity,
    ExactKet,
    apply_unitary_quarter,
    density_from_group,
    density_from_ket,
    ket_from_density,
    stabilizer_of_ket,
    stabilizes,
)
from twobloch.pauli import hermitian_paulis, parse_pauli, positive_paulis
from twobloch.render import SceneSpec, render_svg

GOLDEN = Path(__file__).parent / "golden"
EQ1 = {
    "up-up": (ExactKet([1, 0, 0, 0]), {"+II", "+ZI", "+IZ", "+ZZ"}),
    "up-left": (ExactKet([1, -1, 0, 0]), {"+II", "+ZI", "-IX", "-ZX"}),
    "Psi-": (ExactKet([0, 1, -1, 0]), {"+II", "-ZZ", "-XX", "-YY"}),
    "Phi+i": (ExactKet([1, 0, 0, 1j]), {"+II", "+ZZ", "+XY", "+YX"}),
}
EQ3 = ExactDensity([[1, 1j, -1, 1j], [-1j, 1, 1j, 1], [-1, -1j, 1, -1j], [-1j, 1, 1j, 1]], 4)


def criterion_01_catalog_counts():
    catalog_mod._catalog.cache_clear()
    start = time.perf_counter()
    states = enumerate_catalog()
    elapsed = time.perf_counter() - start
    assert len(states) == 60
    assert sum(s.state_class is StateClass.SEPARABLE for s in states) == 36
    assert sum(s.state_class is StateClass.ENTANGLED for s in states) == 24
    assert elapsed < 1.0, f"enumeration took {elapsed:.3f} s"


def criterion_02_group_sum_identity():
    for s in enumerate_catalog():
        assert density_from_group(s.group) == density_from_ket(s.ket), s.id


def criterion_03_eigen_equations():
    signed = hermitian_paulis(include_identity=True)
    assert len(signed) == 32
    for s in enumerate_catalog():
        members = [m for m in signed if m in s.group]
        others = [m for m in signed if m not in s.group]
        assert len(members) == 4 and len(others) == 28
        assert all(stabilizes(m, s.ket) for m in members)
        # the 27 signed non-members excluding -II, plus -II itself
        assert not any(stabilizes(m, s.ket) for m in others)


def criterion_04_paper_groups():
    for alias, (ket, want) in EQ1.items():
        g = stabilizer_of_ket(ket)
        assert {str(m) for m in g.elements} == want, alias
        assert g == ALIASES[alias]


def criterion_05_axis_cycle_pipeline():
    psi = frame_from_group(ALIASES["Psi-"])
    once = permute_frame(psi, CYCLE_FIG5)
    g = group_from_frame(once)
    assert {str(m) for m in g.elements} == {"+II", "-ZY", "-YX", "-XZ"}
    rho = density_from_group(g)
    assert rho == EQ3
    assert ket_from_density(rho) == ExactKet([1, -1j, -1, -1j], 4)
    twice = group_from_frame(permute_frame(once, CYCLE_FIG5))
    assert ket_from_density(density_from_group(twice)) == ExactKet([1, -1, -1j, -1j], 4)


def criterion_06_rotation_fixture():
    assert apply_rotation(parse_pauli("IY"), 1, ALIASES["up-up"]) == ALIASES["up-left"]
    ket = apply_unitary_quarter(parse_pauli("IY"), ExactKet([1, 0, 0, 0]))
    assert ket.same_state(ExactKet([1, -1, 0, 0], 2))
    assert stabilizer_of_ket(ket) == ALIASES["up-left"]


def criterion_07_frame_bijections():
    states = enumerate_catalog()
    ent = [s.frame.alignment for s in states if isinstance(s.frame, EntangledFrame)]
    want = {tuple(map(tuple, m.tolist())) for m in signed_permutations(det=-1)}
    assert len(ent) == 24 and set(ent) == want
    sep = [(s.frame.arrow1, s.frame.arrow2) for s in states if isinstance(s.frame, SeparableFrame)]
    axes = [SignedAxis(a, sg) for a in "xyz" for sg in (1, -1)]
    assert len(sep) == 36 and set(sep) == set(product(axes, axes))
    for s in states:
        assert group_from_frame(frame_from_group(s.group)) == s.group


def criterion_08_tableau_oracle_equivalence():
    cases = 0
    for s in enumerate_catalog():
        for p in positive_paulis():
            ket = s.ket
            for turns in (1, 2, 3):
                ket = apply_unitary_quarter(p, ket)
                assert apply_rotation(p, turns, s.group) == stabilizer_of_ket(ket), (s.id, str(p), turns)
                cases += 1
    assert cases == 60 * 15 * 3


def criterion_09_handedness():
    for s in enumerate_catalog():
        if isinstance(s.frame, EntangledFrame):
            assert round(np.linalg.det(s.frame.matrix)) == -1
        for gate in GATES:
            f = frame_from_group(apply_clifford(gate, s.group))
            if isinstance(f, EntangledFrame):
                assert round(np.linalg.det(f.matrix)) == -1


def criterion_10_cube_rotation():
    ent = [s for s in enumerate_catalog() if s.state_class is StateClass.ENTANGLED]
    sphere2 = [p for p in positive_paulis() if p.letters[0] == "I"]
    target = {s.group: group_from_frame(permute_frame(s.frame, CYCLE_FIG5)) for s in ent}
    matches = [
        (p1, t1, p2, t2)
        for (p1, t1), (p2, t2) in product(product(sphere2, (1, 3)), repeat=2)
        if all(apply_rotation(p2, t2, apply_rotation(p1, t1, g)) == target[g] for g in target)
    ]
    assert matches
    assert all(p1 != p2 for p1, _, p2, _ in matches)


def criterion_11_render_goldens():
    files = {
        "fig1_up_up.svg": "up-up",
        "fig2_psi_minus.svg": "Psi-",
        "fig3_up_left.svg": "up-left",
        "fig4_phi_plus_i.svg": "Phi+i",
    }
    for name, alias in files.items():
        frame = lookup(ALIASES[alias]).frame
        first = render_svg(SceneSpec(frame)).encode("utf-8")
        second = render_svg(SceneSpec(frame)).encode("utf-8")
        assert first == second
        assert first == (GOLDEN / name).read_bytes(), name


CRITERIA = [
    ("AC1  catalog: 60 states, 36 separable / 24 entangled, < 1 s", criterion_01_catalog_counts),
    ("AC2  group sum equals |ψ⟩⟨ψ| for all 60 states", criterion_02_group_sum_identity),
    ("AC3  eigen-equations: 4 members hold, non-members fail", criterion_03_eigen_equations),
    ("AC4  four example groups recovered from their kets", criterion_04_paper_groups),
    ("AC5  axis cycle on Ψ⁻: group, density, kets", criterion_05_axis_cycle_pipeline),
    ("AC6  I⊗Y quarter turn takes ↑↑ to ↑←", criterion_06_rotation_fixture),
    ("AC7  frame bijections 24 + 36 and roundtrip", criterion_07_frame_bijections),
    ("AC8  tableau vs dense rotations, 2700 cases", criterion_08_tableau_oracle_equivalence),
    ("AC9  entangled frames have det -1 and gates keep it", criterion_09_handedness),
    ("AC10 axis cycle = two sphere-2 quarter turns", criterion_10_cube_rotation),
    ("AC11 golden SVGs byte-identical", criterion_11_render_goldens),
]


@pytest.mark.parametrize("title, check", CRITERIA, ids=[t.split()[0] for t, _ in CRITERIA])
def test_acceptance(title, check, acceptance_log):
    try:
        check()
    except Exception:
        acceptance_log.append(f"FAIL  {title}")
        raise
    acceptance_log.append(f"PASS  {title}")


if __name__ == "__main__":
    failed = 0
    for title, check in CRITERIA:
        try:
            check()
            print(f"PASS  {title}")
        except Exception as exc:
            failed += 1
            print(f"FAIL  {title}: {type(exc).__name__}: {exc}")
    raise SystemExit(1 if failed else 0)
