"""Nonnegative step functions on [0,1] and the peakiness identity.

For f >= 0 with ||f||_2 = 1 in L2[0,1], the parallelogram law gives the
exact identity

    ||f - 1||_2^2 = 2 - 2 ||f||_1,

so the squared distance to the constant function 1 (the "peakiness" c, with
||f||_1 = 1 - c/2) is computable from the l1 norm alone. Step functions make
every integral exact, so the identity is testable to machine precision.

vector_to_step bridges the coordinate picture: spreading |a_i| sqrt(n)/||x||_2
over n equal cells yields a unit-norm f whose peakiness equals the tightness
constant of x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Vector, moduli, norm2
from .errors import DomainError, NormalizationError, UndefinedConstantError
from .tightness import ZERO_VECTOR_MSG

UNIT_NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class StepFunction:
    """Right-open steps: value k on [t_{k-1}, t_k), breakpoints 0=t_0<...<t_m=1."""

    breakpoints: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.breakpoints, dtype=np.float64)
        v = np.asarray(self.values, dtype=np.float64)
        if t.ndim != 1 or v.ndim != 1 or v.size == 0 or t.size != v.size + 1:
            raise ValueError("need m+1 breakpoints for m values, m >= 1")
        if t[0] != 0.0 or t[-1] != 1.0:
            raise ValueError("breakpoints must start at 0 and end at 1")
        if not np.all(np.diff(t) > 0.0):
            raise ValueError("breakpoints must be strictly increasing")
        if not np.all(np.isfinite(v)):
            raise ValueError("values must be finite")
        if np.any(v < 0.0):
            raise DomainError("step function values must be nonnegative")
        t = t.copy()
        v = v.copy()
        t.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "breakpoints", t)
        object.__setattr__(self, "values", v)

    @property
    def cells(self) -> int:
        return self.values.size

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.breakpoints)


def lp_norm(f: StepFunction, p: int) -> float:
    """||f||_p for p in {1, 2}, by exact piecewise integration."""
    if p == 1:
        return float(math.fsum(f.values * f.widths))
    if p == 2:
        return math.sqrt(math.fsum(f.values * f.values * f.widths))
    raise ValueError(f"p must be 1 or 2, got {p}")


def _require_unit(f: StepFunction, caller: str) -> None:
    l2 = lp_norm(f, 2)
    if abs(l2 - 1.0) > UNIT_NORM_TOL:
        raise NormalizationError(
            f"{caller} needs ||f||_2 = 1, got {l2!r}; normalize first"
        )


def normalize(f: StepFunction) -> StepFunction:
    """Rescale to unit L2 norm."""
    l2 = lp_norm(f, 2)
    if l2 == 0.0:
        raise DomainError("cannot normalize the zero function")
    return StepFunction(f.breakpoints, f.values / l2)


def peakiness(f: StepFunction) -> float:
    """c = ||f - 1||_2^2 for unit-norm f, by direct integration.

    Equals 2 - 2||f||_1; zero exactly when f is the constant function 1.
    """
    _require_unit(f, "peakiness")
    d = f.values - 1.0
    return float(math.fsum(d * d * f.widths))


def parallelogram_check(f: StepFunction) -> tuple[float, float]:
    """(4, ||f-1||_2^2 + ||f+1||_2^2) for unit-norm f; the two agree."""
    _require_unit(f, "parallelogram_check")
    dm = f.values - 1.0
    dp = f.values + 1.0
    rhs = math.fsum(dm * dm * f.widths) + math.fsum(dp * dp * f.widths)
    return 4.0, float(rhs)


def vector_to_step(x: Vector) -> StepFunction:
    """Spread |a_i| sqrt(n)/||x||_2 over n equal cells of [0,1].

    The result has unit L2 norm and peakiness equal to the tightness
    constant of x.
    """
    if x.is_zero():
        raise UndefinedConstantError(ZERO_VECTOR_MSG)
    n = x.n
    values = moduli(x) * (math.sqrt(n) / norm2(x))
    return StepFunction(np.linspace(0.0, 1.0, n + 1), values)
