"""Per-vector tightness of the l1-l2 inequality.

For nonzero x in R^n or C^n the inequality ||x||_1 <= sqrt(n)||x||_2 has the
exact defect

    c_x = 2 * (1 - ||x||_1 / (sqrt(n) * ||x||_2)),

which also equals sum_i (|a_i| / ||x||_2 - 1/sqrt(n))^2 and the squared l2
distance from x/||x||_2 to the nearest constant-modulus vector, i.e. the
nearest (1/sqrt(n))(c_1, ..., c_n) with every |c_i| = 1. c_x is 0 exactly for
constant-modulus vectors and at most 2 - 2/sqrt(n) (standard basis vectors).

All functions reject the zero vector: the constant has no value there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import COMPLEX, REAL, Vector, moduli, norm1, norm2
from .errors import DomainError, UndefinedConstantError

ZERO_VECTOR_MSG = "tightness constant undefined for zero vector"

# Comparisons against sqrt(s/n) favor "true" at the boundary: the equality
# case is legitimate and must not flip on rounding.
SQRT_S_BOUND_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class ConstantModulusVector:
    """Phases c_1..c_n with |c_i| = 1; represents (1/sqrt(n))(c_1,...,c_n)."""

    phases: np.ndarray
    field: str

    def __post_init__(self):
        p = np.asarray(self.phases, dtype=np.complex128 if self.field == COMPLEX else np.float64)
        if p.ndim != 1 or p.size == 0:
            raise ValueError("phases must be a nonempty 1-d array")
        if np.max(np.abs(np.abs(p) - 1.0)) > 1e-12:
            raise ValueError("every phase must have unit modulus")
        p = p.copy()
        p.setflags(write=False)
        object.__setattr__(self, "phases", p)

    @property
    def n(self) -> int:
        return self.phases.size

    def as_vector(self) -> Vector:
        """The represented unit vector (1/sqrt(n)) * phases."""
        return Vector(self.phases / math.sqrt(self.n), self.field)


@dataclass(frozen=True, eq=False)
class TightnessReport:
    n: int
    field: str
    l1: float
    l2: float
    c_x: float
    nearest: ConstantModulusVector
    distance: float


def _check_nonzero(x: Vector) -> None:
    if x.is_zero():
        raise UndefinedConstantError(ZERO_VECTOR_MSG)


def tightness_constant(x: Vector) -> float:
    """Exact defect c_x = 2(1 - ||x||_1 / (sqrt(n) ||x||_2)), clamped to [0, 2].

    The clamp only absorbs rounding: both closed forms can dip a few ulp
    below zero near the constant-modulus equality case.
    """
    _check_nonzero(x)
    c = 2.0 * (1.0 - norm1(x) / (math.sqrt(x.n) * norm2(x)))
    return min(max(c, 0.0), 2.0)


def nearest_constant_modulus(x: Vector) -> tuple[ConstantModulusVector, float]:
    """Closest constant-modulus vector to x/||x||_2 and the distance to it.

    Phases are a_i/|a_i| where a_i != 0 and +1 where a_i = 0 (any unit phase
    is equally close there; +1 keeps the output deterministic). The distance
    equals sqrt(c_x).
    """
    _check_nonzero(x)
    a = x.data
    if x.field == REAL:
        phases = np.where(a >= 0.0, 1.0, -1.0)
    else:
        mods = moduli(x)
        phases = np.where(mods > 0.0, a / np.where(mods > 0.0, mods, 1.0), 1.0 + 0.0j)
        # renormalize so |c_i| = 1 holds to working precision
        phases = phases / np.abs(phases)
    cm = ConstantModulusVector(phases, x.field)
    diff = x.data / norm2(x) - cm.phases / math.sqrt(x.n)
    distance = norm2(Vector(diff, x.field))
    return cm, distance


def satisfies_sqrt_s_bound(x: Vector, s: float) -> bool:
    """Whether ||x||_1 <= sqrt(s) ||x||_2, decided through the constant:
    true iff 1 - c_x/2 <= sqrt(s/n) (+ boundary tolerance)."""
    _check_nonzero(x)
    if not (0.0 < s <= x.n):
        raise DomainError(f"s must satisfy 0 < s <= n = {x.n}, got {s}")
    c = tightness_constant(x)
    return 1.0 - c / 2.0 <= math.sqrt(s / x.n) + SQRT_S_BOUND_TOL


def analyze(x: Vector) -> TightnessReport:
    """Bundle norms, c_x, and the nearest constant-modulus vector."""
    _check_nonzero(x)
    nearest, distance = nearest_constant_modulus(x)
    return TightnessReport(
        n=x.n,
        field=x.field,
        l1=norm1(x),
        l2=norm2(x),
        c_x=tightness_constant(x),
        nearest=nearest,
        distance=distance,
    )
