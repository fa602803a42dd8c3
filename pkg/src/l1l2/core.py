"""Field-tagged dense vectors and the two norms everything else is built on.

A Vector carries an explicit scalar field ("real" or "complex"), fixed at
construction. Mixing fields in one operation raises FieldMismatchError
instead of silently promoting, so user mistakes surface early. All values
are immutable after construction and safe to share between threads.

Norms accumulate with math.fsum (correctly rounded), which makes norm1 and
norm2 exactly invariant under coordinate permutation.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .errors import DimensionMismatchError, FieldMismatchError

REAL = "real"
COMPLEX = "complex"


def _as_array(entries, field: str | None) -> tuple[np.ndarray, str]:
    a = np.asarray(entries)
    if a.ndim != 1:
        raise DimensionMismatchError(f"vector entries must be 1-d, got shape {a.shape}")
    if a.size == 0:
        raise ValueError("vector must have at least one entry")
    if np.iscomplexobj(a):
        inferred = COMPLEX
    else:
        inferred = REAL
    if field is None:
        field = inferred
    if field not in (REAL, COMPLEX):
        raise ValueError(f"unknown field tag {field!r}")
    if field == REAL:
        if inferred == COMPLEX:
            raise FieldMismatchError("complex entries in a vector tagged real")
        a = np.asarray(a, dtype=np.float64)
    else:
        a = np.asarray(a, dtype=np.complex128)
    if not np.all(np.isfinite(a.view(np.float64) if field == COMPLEX else a)):
        raise ValueError("vector entries must be finite")
    a = a.copy()
    a.setflags(write=False)
    return a, field


class Vector:
    """Dense coordinate vector over a fixed scalar field, length >= 1."""

    __slots__ = ("data", "field")

    def __init__(self, entries: Iterable, field: str | None = None):
        data, tag = _as_array(entries, field)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "field", tag)

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    def __len__(self) -> int:
        return self.data.size

    @property
    def n(self) -> int:
        return self.data.size

    def is_zero(self) -> bool:
        return bool(np.all(self.data == 0))

    def __repr__(self) -> str:
        return f"Vector({self.data.tolist()!r}, field={self.field!r})"


def as_vector(x, field: str | None = None) -> Vector:
    """Coerce an array-like (or pass through a Vector) to a Vector."""
    if isinstance(x, Vector):
        if field is not None and x.field != field:
            raise FieldMismatchError(f"vector is {x.field}, expected {field}")
        return x
    return Vector(x, field)


def moduli(x: Vector) -> np.ndarray:
    """Entrywise |a_i| as a float array."""
    a = x.data
    if x.field == COMPLEX:
        return np.hypot(a.real, a.imag)
    return np.abs(a)


def norm1(x: Vector) -> float:
    """l1 norm: sum of entry moduli."""
    return math.fsum(moduli(x))


def norm2(x: Vector) -> float:
    """l2 norm: sqrt of the sum of squared entry moduli."""
    a = x.data
    if x.field == COMPLEX:
        sq = a.real * a.real + a.imag * a.imag
    else:
        sq = a * a
    return math.sqrt(math.fsum(sq))


def inner(x: Vector, y: Vector) -> float | complex:
    """Inner product sum_i x_i * conj(y_i); conjugate-linear in y.

    inner(x, x) equals norm2(x)**2.
    """
    if x.field != y.field:
        raise FieldMismatchError(f"cannot pair {x.field} with {y.field}")
    if len(x) != len(y):
        raise DimensionMismatchError(f"lengths differ: {len(x)} vs {len(y)}")
    if x.field == COMPLEX:
        return complex(np.vdot(y.data, x.data))
    return float(np.dot(x.data, y.data))
