"""Exact Gaussian-integer arrays.

A :class:`GaussArray` stores ``re + i*im`` as a pair of int64 numpy arrays.
All arithmetic is integer arithmetic, so results are exact as long as
entries stay far below 2**62 (they never exceed a few hundred here).
"""

from __future__ import annotations

import math
from functools import reduce
from numbers import Integral

import numpy as np


def _as_int_array(values) -> np.ndarray:
    arr = np.asarray(values)
    if arr.dtype == object or np.issubdtype(arr.dtype, np.integer):
        return arr.astype(np.int64)
    if np.issubdtype(arr.dtype, np.floating):
        if not np.all(arr == np.round(arr)):
            raise ValueError("non-integer entry in Gaussian-integer array")
        return arr.astype(np.int64)
    raise TypeError(f"cannot build integer array from dtype {arr.dtype}")


class GaussArray:
    """Immutable array of Gaussian integers."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        re = _as_int_array(re)
        im = np.zeros_like(re) if im is None else _as_int_array(im)
        if re.shape != im.shape:
            raise ValueError(f"shape mismatch: {re.shape} vs {im.shape}")
        re.setflags(write=False)
        im.setflags(write=False)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussArray is immutable")

    @classmethod
    def from_complex(cls, values) -> GaussArray:
        """Build from (nested) Python ints/complex numbers with integer parts."""
        arr = np.asarray(values, dtype=complex)
        return cls(arr.real, arr.imag)

    @classmethod
    def zeros(cls, shape) -> GaussArray:
        return cls(np.zeros(shape, dtype=np.int64))

    @classmethod
    def identity(cls, n: int) -> GaussArray:
        return cls(np.eye(n, dtype=np.int64))

    @property
    def shape(self) -> tuple[int, ...]:
        return self.re.shape

    def __len__(self) -> int:
        return len(self.re)

    def __getitem__(self, idx) -> GaussArray:
        return GaussArray(self.re[idx], self.im[idx])

    def __add__(self, other: GaussArray) -> GaussArray:
        return GaussArray(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussArray) -> GaussArray:
        return GaussArray(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussArray:
        return GaussArray(-self.re, -self.im)

    def __mul__(self, scalar) -> GaussArray:
        """Multiply by an integer or by a Gaussian integer given as complex."""
        if isinstance(scalar, Integral):
            return GaussArray(self.re * int(scalar), self.im * int(scalar))
        c = complex(scalar)
        a, b = int(c.real), int(c.imag)
        if a != c.real or b != c.imag:
            raise ValueError(f"{scalar!r} is not a Gaussian integer")
        return GaussArray(a * self.re - b * self.im, a * self.im + b * self.re)

    __rmul__ = __mul__

    def __matmul__(self, other: GaussArray) -> GaussArray:
        return GaussArray(
            self.re @ other.re - self.im @ other.im,
            self.re @ other.im + self.im @ other.re,
        )

    def times_i(self) -> GaussArray:
        return GaussArray(-self.im, self.re)

    def conj(self) -> GaussArray:
        return GaussArray(self.re, -self.im)

    @property
    def T(self) -> GaussArray:
        return GaussArray(self.re.T, self.im.T)

    def dagger(self) -> GaussArray:
        return GaussArray(self.re.T, -self.im.T)

    def outer(self, other: GaussArray) -> GaussArray:
        """``self ⊗ other†`` for two vectors."""
        a = GaussArray(self.re[:, None], self.im[:, None])
        b = GaussArray(other.re[None, :], -other.im[None, :])
        return a @ b

    def kron(self, other: GaussArray) -> GaussArray:
        return GaussArray(
            np.kron(self.re, other.re) - np.kron(self.im, other.im),
            np.kron(self.re, other.im) + np.kron(self.im, other.re),
        )

    def abs_sq(self) -> np.ndarray:
        return self.re * self.re + self.im * self.im

    def trace(self) -> complex:
        return complex(int(np.trace(self.re)), int(np.trace(self.im)))

    def content(self) -> int:
        """gcd of every real and imaginary component (0 for the zero array)."""
        flat = [int(v) for v in self.re.ravel()] + [int(v) for v in self.im.ravel()]
        return reduce(math.gcd, flat, 0)

    def floordiv_exact(self, d: int) -> GaussArray:
        if np.any(self.re % d) or np.any(self.im % d):
            raise ValueError(f"entries not divisible by {d}")
        return GaussArray(self.re // d, self.im // d)

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def to_complex(self) -> np.ndarray:
        return self.re + 1j * self.im

    def tolist(self):
        """Nested lists with each entry as ``[re, im]``."""
        return np.stack([self.re, self.im], axis=-1).tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussArray):
            return NotImplemented
        return (
            self.shape == other.shape
            and np.array_equal(self.re, other.re)
            and np.array_equal(self.im, other.im)
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.re.tobytes(), self.im.tobytes()))

    def __repr__(self) -> str:
        return f"GaussArray({format_gauss_array(self)})"


def format_gauss(re: int, im: int) -> str:
    re, im = int(re), int(im)
    if im == 0:
        return str(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{im}i"
    sign = "+" if im > 0 else "-"
    mag = "" if abs(im) == 1 else str(abs(im))
    return f"{re}{sign}{mag}i"


def format_gauss_array(a: GaussArray) -> str:
    if a.re.ndim == 0:
        return format_gauss(a.re, a.im)
    return "[" + ", ".join(format_gauss_array(a[k]) for k in range(len(a))) + "]"
