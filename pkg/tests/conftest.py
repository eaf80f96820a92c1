"""Shared fixtures and an independent floating-point oracle.

The oracle builds matrices from textbook Pauli/gate matrices with
``np.kron``; it never touches the symplectic code it is used to check.
"""

import numpy as np
import pytest

from twobloch.catalog import enumerate_catalog

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

GATE_MATRICES = {
    "H1": np.kron(np.array([[1, 1], [1, -1]]) / np.sqrt(2), np.eye(2)),
    "H2": np.kron(np.eye(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2)),
    "S1": np.kron(np.diag([1, 1j]), np.eye(2)),
    "S2": np.kron(np.eye(2), np.diag([1, 1j])),
    "CNOT12": np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex),
    "CNOT21": np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex),
}


def np_pauli(text: str) -> np.ndarray:
    """Dense matrix of e.g. ``"-ZY"`` from textbook matrices."""
    sign = -1 if text.startswith("-") else 1
    letters = text.lstrip("+-")
    return sign * np.kron(PAULI_MATRICES[letters[0]], PAULI_MATRICES[letters[1]])


def np_rotation(text: str, quarter_turns: int) -> np.ndarray:
    """exp(i θ/2 P) with θ = quarter_turns·π/2, via cos/sin since P² = I."""
    half = quarter_turns * np.pi / 4
    return np.cos(half) * np.eye(4) + 1j * np.sin(half) * np_pauli(text)


@pytest.fixture(scope="session")
def catalog():
    return enumerate_catalog()


@pytest.fixture(scope="session")
def entangled(catalog):
    return [s for s in catalog if s.state_class.value == "Entangled"]


@pytest.fixture(scope="session")
def separable(catalog):
    return [s for s in catalog if s.state_class.value == "Separable"]


_ACCEPTANCE_LOG: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LOG


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
