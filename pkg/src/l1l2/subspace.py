"""Subspaces: projectors, nearest unit vectors, and the sharp subspace constant.

A Subspace holds an orthonormal basis B (columns) and the derived orthogonal
projector P = B B*. For any x with Px != 0, Px/||Px|| is the closest unit
vector of the subspace to x, with

    ||x - Px/||Px||||^2 = ||x||^2 - 2||Px|| + 1.

The sharp constant c of the subspace is defined through the supremum of
||Px|| over constant-modulus vectors x: c = 2 - 2 * sup ||Px||. It is the
largest constant such that every unit vector y in S satisfies
||y||_1 <= (1 - c/2) sqrt(n). Real subspaces up to EXACT_SEARCH_CUTOFF
ambient dimensions get a certified brute-force value; larger or complex
ones use a seeded alternating-phase heuristic (a lower bound on sup ||Px||,
never an overestimate).

Subspace values are immutable and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import COMPLEX, REAL, Vector, as_vector, norm2
from .errors import (
    DimensionMismatchError,
    EmptySubspaceError,
    ExactSearchUnavailableError,
    FieldMismatchError,
    NoUniqueNearestError,
)
from .tightness import ConstantModulusVector

# 2^(22-1) deduplicated sign patterns is a few seconds of vectorized work;
# above that the exact search refuses and points at the heuristic.
EXACT_SEARCH_CUTOFF = 22

# Gram-Schmidt rank tolerance: a candidate is dependent if its residual is
# below this factor times the largest input norm.
RANK_TOL = 1e-10

# Alternating ascent stops once ||P c|| improves by less than this.
ASCENT_TOL = 1e-12

METHOD_EXACT = "exact_brute_force"
METHOD_HEURISTIC = "alternating_heuristic"


class Subspace:
    """Orthonormal basis + derived projector. Build via subspace_from_spanning_set."""

    __slots__ = ("basis", "projector", "field")

    def __init__(self, basis: np.ndarray, field: str):
        basis = np.asarray(basis)
        if basis.ndim != 2 or basis.shape[1] == 0:
            raise EmptySubspaceError("subspace needs at least one basis vector")
        gram = basis.conj().T @ basis
        if np.max(np.abs(gram - np.eye(basis.shape[1]))) > 1e-8:
            raise ValueError("basis columns are not orthonormal")
        basis = basis.copy()
        basis.setflags(write=False)
        projector = basis @ basis.conj().T
        projector.setflags(write=False)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "projector", projector)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def __repr__(self) -> str:
        return f"<Subspace dim={self.dim} of {self.field}^{self.ambient_dim}>"


@dataclass(frozen=True, eq=False)
class SubspaceBoundReport:
    """Sharp constant c = 2 - 2*max_proj_norm and the maximizing witness."""

    c: float
    max_proj_norm: float
    witness: ConstantModulusVector
    method: str
    certified: bool


def subspace_from_spanning_set(vectors) -> Subspace:
    """Orthonormalize a spanning set into a Subspace.

    Modified Gram-Schmidt with one re-orthogonalization pass; linearly
    dependent inputs are dropped, so dim is the numerical rank.
    """
    vecs = [as_vector(v) for v in vectors]
    if not vecs:
        raise EmptySubspaceError("empty spanning set")
    field = vecs[0].field
    n = len(vecs[0])
    for v in vecs[1:]:
        if v.field != field:
            raise FieldMismatchError("spanning vectors mix real and complex")
        if len(v) != n:
            raise DimensionMismatchError("spanning vectors have unequal lengths")
    scale = max(norm2(v) for v in vecs)
    if scale == 0.0:
        raise EmptySubspaceError("all spanning vectors are zero")
    cols: list[np.ndarray] = []
    for v in vecs:
        w = np.array(v.data, dtype=np.complex128 if field == COMPLEX else np.float64)
        for _ in range(2):  # MGS + re-orthogonalization
            for q in cols:
                w = w - np.vdot(q, w) * q
        r = np.linalg.norm(w)
        if r < RANK_TOL * scale:
            continue
        cols.append(w / r)
    if not cols:
        raise EmptySubspaceError("spanning set has numerical rank zero")
    return Subspace(np.column_stack(cols), field)


def _check_ambient(S: Subspace, x: Vector) -> None:
    if x.field != S.field:
        raise FieldMismatchError(f"vector field {x.field} != subspace field {S.field}")
    if len(x) != S.ambient_dim:
        raise DimensionMismatchError(
            f"vector length {len(x)} != ambient dimension {S.ambient_dim}"
        )


def project(S: Subspace, x: Vector) -> Vector:
    """Orthogonal projection Px."""
    _check_ambient(S, x)
    return Vector(S.projector @ x.data, S.field)


def nearest_unit_in_subspace(S: Subspace, x: Vector) -> tuple[Vector, float]:
    """Closest unit vector of S to x, namely Px/||Px||, with its distance.

    The distance satisfies d^2 = ||x||^2 - 2||Px|| + 1. Raises
    NoUniqueNearestError when Px = 0 (all unit vectors are equidistant).
    """
    _check_ambient(S, x)
    p = S.projector @ x.data
    pnorm = np.linalg.norm(p)
    if pnorm <= 1e-14 * norm2(x):
        raise NoUniqueNearestError("x is orthogonal to the subspace")
    u = p / pnorm
    distance = float(np.linalg.norm(x.data - u))
    return Vector(u, S.field), distance


def _sign_block(ks: np.ndarray, n: int) -> np.ndarray:
    """Sign patterns for indices ks, first coordinate fixed at +1.

    Lexicographic: bit (n-2) of k is the second coordinate's sign
    (0 -> +1, 1 -> -1), so increasing k enumerates patterns in
    lexicographic order with +1 ordered before -1.
    """
    out = np.empty((ks.size, n))
    out[:, 0] = 1.0
    for j in range(1, n):
        bits = (ks >> (n - 1 - j)) & 1
        out[:, j] = 1.0 - 2.0 * bits
    return out


def subspace_constant_exact(S: Subspace, cutoff: int = EXACT_SEARCH_CUTOFF,
                            chunk: int = 1 << 16) -> SubspaceBoundReport:
    """Certified sharp constant by exhausting all sign vectors (1/sqrt(n))(+-1,...).

    Patterns come in +-pairs with equal ||Px||, so the first coordinate is
    fixed at +1; ties go to the lexicographically smallest pattern, so the
    result does not depend on how the range is partitioned (`chunk`). Real
    field only, ambient dimension at most `cutoff`.
    """
    if S.field != REAL:
        raise ExactSearchUnavailableError(
            "exact search needs a real subspace; complex phases form a continuum "
            "-- use subspace_constant_heuristic"
        )
    n = S.ambient_dim
    if n > cutoff:
        raise ExactSearchUnavailableError(
            f"ambient dimension {n} exceeds the exact-search cutoff {cutoff} "
            "-- use subspace_constant_heuristic"
        )
    total = 1 << (n - 1)
    sqrt_n = math.sqrt(n)
    best_val = -1.0
    best_k = 0
    for lo in range(0, total, chunk):
        ks = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        signs = _sign_block(ks, n)
        vals = np.linalg.norm(signs @ S.basis, axis=1) / sqrt_n
        i = int(np.argmax(vals))
        if vals[i] > best_val:
            best_val = float(vals[i])
            best_k = int(ks[i])
    phases = _sign_block(np.array([best_k], dtype=np.int64), n)[0]
    witness = ConstantModulusVector(phases, REAL)
    return SubspaceBoundReport(
        c=max(2.0 - 2.0 * best_val, 0.0),
        max_proj_norm=best_val,
        witness=witness,
        method=METHOD_EXACT,
        certified=True,
    )


def alternating_ascent(projector: np.ndarray, start: np.ndarray,
                       max_iter: int = 10_000) -> tuple[np.ndarray, float, list[float]]:
    """Alternating maximization of ||P c|| over unit-modulus phase vectors.

    Repeats y <- Pc, c_i <- y_i/|y_i| (previous phase kept where y_i = 0)
    until ||Pc|| improves by less than ASCENT_TOL. ||Pc|| never decreases
    across iterations. Returns (phases, ||Pc||, per-iteration values).
    """
    c = np.array(start)
    value = float(np.linalg.norm(projector @ c))
    history = [value]
    for _ in range(max_iter):
        y = projector @ c
        mods = np.abs(y)
        nz = mods > 0.0
        c = np.where(nz, y / np.where(nz, mods, 1.0), c)
        new_value = float(np.linalg.norm(projector @ c))
        history.append(new_value)
        done = new_value - value < ASCENT_TOL
        value = new_value
        if done:
            break
    return c, value, history


def _polish_signs(P: np.ndarray, s: np.ndarray, max_rounds: int = 10_000) -> np.ndarray:
    """Single- and pair-flip local search on f(s) = s.P.s = ||Ps||^2.

    The simultaneous update above can stall on patterns that a coordinate
    flip (against the diagonal term) or a coupled pair flip still improves;
    this drives s to a 1- and 2-opt sign pattern. Every accepted move
    strictly increases ||Ps||.
    """
    n = s.size
    diag = np.diag(P)
    for _ in range(max_rounds):
        y = P @ s
        improved = True
        while improved:
            improved = False
            for i in range(n):
                if 4.0 * diag[i] - 4.0 * s[i] * y[i] > ASCENT_TOL:
                    y = y - 2.0 * s[i] * P[:, i]
                    s[i] = -s[i]
                    improved = True
        gains = 4.0 * diag - 4.0 * s * y
        pair = gains[:, None] + gains[None, :] + 8.0 * np.outer(s, s) * P
        np.fill_diagonal(pair, -np.inf)
        i, j = np.unravel_index(int(np.argmax(pair)), pair.shape)
        if pair[i, j] <= ASCENT_TOL:
            break
        s[i] = -s[i]
        s[j] = -s[j]
    return s


def _polish_phases(P: np.ndarray, c: np.ndarray, max_sweeps: int = 10_000) -> np.ndarray:
    """Coordinatewise exact phase updates on f(c) = Re c*.P.c = ||Pc||^2.

    For each i the optimal unit phase aligns with g_i = (Pc)_i - P_ii c_i;
    sweeps run until one improves f by less than ASCENT_TOL.
    """
    diag = np.diag(P)
    for _ in range(max_sweeps):
        y = P @ c
        f_before = float(np.vdot(c, y).real)
        for i in range(c.size):
            g = y[i] - diag[i] * c[i]
            if abs(g) == 0.0:
                continue
            ci = g / abs(g)
            y = y + P[:, i] * (ci - c[i])
            c[i] = ci
        f_after = float(np.vdot(c, P @ c).real)
        if f_after - f_before < ASCENT_TOL:
            return c
    return c


def subspace_constant_heuristic(S: Subspace, restarts: int = 32,
                                seed: int = 0) -> SubspaceBoundReport:
    """Uncertified sharp-constant estimate from seeded alternating ascent.

    Each restart ascends from random unit phases (random signs in the real
    case) and is then polished with coordinatewise moves the simultaneous
    update cannot make. The best restart wins, earlier restarts winning
    ties. The value never exceeds the true sup ||Px||, so the reported c is
    an upper bound on the true constant.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    n = S.ambient_dim
    P = S.projector
    rng = np.random.default_rng(seed)
    best_val = -1.0
    best_phases: np.ndarray | None = None
    for _ in range(restarts):
        if S.field == REAL:
            start = rng.integers(0, 2, size=n) * 2.0 - 1.0
        else:
            start = np.exp(2j * math.pi * rng.random(n))
        phases, _, _ = alternating_ascent(P, start)
        if S.field == REAL:
            phases = _polish_signs(P, np.where(phases >= 0.0, 1.0, -1.0))
        else:
            phases = _polish_phases(P, phases / np.abs(phases))
        value = float(np.linalg.norm(P @ phases))
        if value > best_val:
            best_val = value
            best_phases = phases
    if S.field == COMPLEX:
        best_phases = best_phases / np.abs(best_phases)
    max_proj_norm = float(np.linalg.norm(P @ best_phases)) / math.sqrt(n)
    witness = ConstantModulusVector(best_phases, S.field)
    return SubspaceBoundReport(
        c=max(2.0 - 2.0 * max_proj_norm, 0.0),
        max_proj_norm=max_proj_norm,
        witness=witness,
        method=METHOD_HEURISTIC,
        certified=False,
    )


def subspace_constant(S: Subspace, restarts: int = 32, seed: int = 0,
                      cutoff: int = EXACT_SEARCH_CUTOFF) -> SubspaceBoundReport:
    """Best available constant: exact when the field and size permit, else heuristic."""
    if S.field == REAL and S.ambient_dim <= cutoff:
        return subspace_constant_exact(S, cutoff)
    return subspace_constant_heuristic(S, restarts, seed)


def unit_vector_l1_bound(S: Subspace, restarts: int = 32, seed: int = 0) -> float:
    """The sharp bound (1 - c/2) sqrt(n) on ||y||_1 over unit vectors y of S.

    Uses the best available constant; call subspace_constant directly when
    the certified flag matters.
    """
    report = subspace_constant(S, restarts=restarts, seed=seed)
    return report.max_proj_norm * math.sqrt(S.ambient_dim)
