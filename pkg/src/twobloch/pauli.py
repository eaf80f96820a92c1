"""Two-qubit Pauli operators in binary-symplectic form.

An operator is stored as ``i**phase * X^x1 Z^z1 ⊗ X^x2 Z^z2``.  With the
convention ``Y = i X Z`` a qubit carrying ``x = z = 1`` contributes one factor
of ``-i`` relative to the letter form, so the displayed sign of a Hermitian
operator is ``i**(phase - n_y)``.

Basis order for dense matrices is ``|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩`` with
``Z|↑⟩ = +|↑⟩``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NonHermitianPauli, PauliParseError
from .exact import GaussArray

LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
BITS_LETTER = {bits: letter for letter, bits in LETTER_BITS.items()}
LETTER_AXIS = {"X": "x", "Y": "y", "Z": "z"}
AXIS_LETTER = {axis: letter for letter, axis in LETTER_AXIS.items()}
_MINUS_SIGNS = ("-", "−")

_SINGLE = {
    "I": GaussArray.from_complex([[1, 0], [0, 1]]),
    "X": GaussArray.from_complex([[0, 1], [1, 0]]),
    "Y": GaussArray.from_complex([[0, -1j], [1j, 0]]),
    "Z": GaussArray.from_complex([[1, 0], [0, -1]]),
}


@dataclass(frozen=True, order=False)
class PauliOp:
    """Signed two-qubit Pauli operator ``i**phase · X^x1 Z^z1 ⊗ X^x2 Z^z2``."""

    phase: int
    x1: int
    z1: int
    x2: int
    z2: int

    def __post_init__(self):
        object.__setattr__(self, "phase", self.phase % 4)
        for name in ("x1", "z1", "x2", "z2"):
            if getattr(self, name) not in (0, 1):
                raise ValueError(f"{name} must be a bit, got {getattr(self, name)!r}")

    @classmethod
    def from_letters(cls, first: str, second: str, sign: int = 1) -> PauliOp:
        x1, z1 = LETTER_BITS[first]
        x2, z2 = LETTER_BITS[second]
        ny = (x1 & z1) + (x2 & z2)
        return cls((0 if sign > 0 else 2) + ny, x1, z1, x2, z2)

    @property
    def bits(self) -> tuple[int, int, int, int]:
        return (self.x1, self.z1, self.x2, self.z2)

    @property
    def n_y(self) -> int:
        return (self.x1 & self.z1) + (self.x2 & self.z2)

    @property
    def letters(self) -> tuple[str, str]:
        return BITS_LETTER[self.x1, self.z1], BITS_LETTER[self.x2, self.z2]

    @property
    def letter_phase(self) -> int:
        """Power of i multiplying the letter form ``A⊗B``."""
        return (self.phase - self.n_y) % 4

    @property
    def is_hermitian(self) -> bool:
        return self.letter_phase % 2 == 0

    @property
    def sign(self) -> int:
        if not self.is_hermitian:
            raise NonHermitianPauli(f"{format_pauli(self)} has an imaginary phase")
        return 1 if self.letter_phase == 0 else -1

    @property
    def is_identity(self) -> bool:
        return not any(self.bits)

    @property
    def weight(self) -> int:
        return sum(letter != "I" for letter in self.letters)

    def positive(self) -> PauliOp:
        """Same letters with sign +1."""
        return PauliOp.from_letters(*self.letters)

    def sort_key(self) -> tuple:
        return (*self.bits, self.letter_phase)

    def __mul__(self, other: PauliOp) -> PauliOp:
        return pauli_mul(self, other)

    def __neg__(self) -> PauliOp:
        return PauliOp(self.phase + 2, *self.bits)

    def __str__(self) -> str:
        return format_pauli(self)


IDENTITY = PauliOp(0, 0, 0, 0, 0)
MINUS_IDENTITY = PauliOp(2, 0, 0, 0, 0)


def pauli_mul(a: PauliOp, b: PauliOp) -> PauliOp:
    """Exact product ``a·b``.

    Moving each ``Z^z`` of ``a`` past the ``X^x`` of ``b`` on the same qubit
    costs a factor ``(-1)^(z·x)``.
    """
    swaps = (a.z1 & b.x1) + (a.z2 & b.x2)
    return PauliOp(
        a.phase + b.phase + 2 * swaps,
        a.x1 ^ b.x1,
        a.z1 ^ b.z1,
        a.x2 ^ b.x2,
        a.z2 ^ b.z2,
    )


def symplectic_product(a: PauliOp, b: PauliOp) -> int:
    return ((a.x1 & b.z1) ^ (a.z1 & b.x1) ^ (a.x2 & b.z2) ^ (a.z2 & b.x2)) & 1


def commutes(a: PauliOp, b: PauliOp) -> bool:
    return symplectic_product(a, b) == 0


@lru_cache(maxsize=None)
def to_dense(a: PauliOp) -> GaussArray:
    """4×4 Gaussian-integer matrix of ``a`` built from Kronecker products."""
    first, second = a.letters
    mat = _SINGLE[first].kron(_SINGLE[second])
    return mat * (1j**a.letter_phase)


def parse_pauli(text: str) -> PauliOp:
    """Parse ``"+ZI"``, ``"-IX"`` or ``"XY"``; i-phases are rejected."""
    s = text.strip()
    sign = 1
    if s[:1] == "+":
        s = s[1:]
    elif s[:1] in _MINUS_SIGNS:
        sign, s = -1, s[1:]
    if len(s) != 2 or any(ch not in LETTER_BITS for ch in s):
        raise PauliParseError(f"malformed Pauli {text!r}: expected sign and two letters from IXYZ")
    return PauliOp.from_letters(s[0], s[1], sign)


def format_pauli(a: PauliOp) -> str:
    prefix = {0: "+", 1: "+i", 2: "-", 3: "-i"}[a.letter_phase]
    return prefix + "".join(a.letters)


def format_tensor(a: PauliOp) -> str:
    """Display form like ``-Z⊗Y``."""
    sign = "-" if a.sign < 0 else ""
    return f"{sign}{a.letters[0]}⊗{a.letters[1]}"


def hermitian_paulis(include_identity: bool = False) -> list[PauliOp]:
    """All 32 (or 30) Hermitian Paulis with sign ±1, in a fixed order."""
    return [
        op
        for op in (PauliOp.from_letters(a, b, s) for a in "IXYZ" for b in "IXYZ" for s in (1, -1))
        if include_identity or not op.is_identity
    ]


def positive_paulis() -> list[PauliOp]:
    """The 15 non-identity Paulis with sign +1."""
    return [op for op in hermitian_paulis() if op.sign > 0]
