"""Coordinate-subspace detection and the greedy phase witness.

An s-dimensional subspace S of R^n satisfies ||y||_1 <= sqrt(s) ||y||_2 for
every y in S only when S is a coordinate subspace, the span of s standard
basis vectors. The structural test inspects the Gram matrix of the projected
basis {Pe_i}: S is coordinate exactly when those projections are pairwise
orthogonal with norms 0 or 1.

When they are not, a greedy phase choice c_1 = 1, c_k aligning
<c_1 Pe_1 + ... + c_{k-1} Pe_{k-1}, Pe_k> builds a constant-modulus vector
whose projection exceeds the coordinate baseline:

    ||P((1/sqrt(n)) sum c_i e_i)||^2 >= (1/n) sum ||Pe_i||^2 = s/n,

strictly when some pair of projections is non-orthogonal. Normalizing that
projection yields an explicit unit vector of S violating the sqrt(s) bound.

The coordinate characterization is established for real scalars; complex
subspaces are handled with the same phase construction, and their verdicts
carry a caveat (see CoordinateDecision.field_note).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import COMPLEX, REAL, Vector, norm1, norm2
from .errors import DomainError
from .subspace import Subspace
from .tightness import ConstantModulusVector

# Default tolerance on Gram off-diagonals and norm rounding; separates
# genuine rotations from floating-point noise at desk scale.
DEFAULT_STRUCTURE_TOL = 1e-8

# Margin a sampled unit vector must beat sqrt(s) by to count as a violation.
VIOLATION_TOL = 1e-9

COMPLEX_FIELD_NOTE = (
    "the coordinate characterization is established for real scalars; "
    "this complex verdict extends it by the same phase construction"
)


@dataclass(frozen=True, eq=False)
class CoordinateDecision:
    """Verdict of the structural test, with a violating witness when negative.

    index_set uses 0-based coordinates. When the verdict is negative the
    witness is a unit vector of S with norm1(w) > sqrt(dim) by
    witness_margin.
    """

    is_coordinate: bool
    index_set: tuple[int, ...] | None
    witness: Vector | None
    witness_margin: float | None
    gram_offdiag: float
    field_note: str | None = None

    @property
    def verdict(self) -> str:
        return "coordinate" if self.is_coordinate else "not_coordinate"


@dataclass(frozen=True, eq=False)
class L1BoundScan:
    """Outcome of sampling S for vectors with ||y||_1 > sqrt(s) ||y||_2."""

    holds_on_samples: bool
    witness: Vector | None
    margin: float | None
    samples_checked: int


def _projected_basis_gram(S: Subspace) -> np.ndarray:
    pe = S.projector  # column i is P e_i
    return pe.conj().T @ pe


def is_coordinate_subspace(S: Subspace, tol: float = DEFAULT_STRUCTURE_TOL) -> CoordinateDecision:
    """Structural test: Gram matrix of {Pe_i} diagonal with 0/1 norms.

    The verdict comes from structure alone, never from sampling. A negative
    verdict carries the greedy witness and its margin over sqrt(dim).
    """
    if not (0.0 < tol < 1.0):
        raise DomainError(f"tol must lie in (0, 1), got {tol}")
    n = S.ambient_dim
    gram = _projected_basis_gram(S)
    norms = np.sqrt(np.abs(np.diag(gram)))
    if n > 1:
        offdiag = float(np.max(np.abs(gram - np.diag(np.diag(gram)))))
    else:
        offdiag = 0.0
    note = COMPLEX_FIELD_NOTE if S.field == COMPLEX else None
    rounded = np.minimum(norms, np.abs(1.0 - norms)) <= tol
    index_set = tuple(int(i) for i in np.flatnonzero(norms > 0.5))
    if offdiag <= tol and bool(np.all(rounded)) and len(index_set) == S.dim:
        return CoordinateDecision(
            is_coordinate=True,
            index_set=index_set,
            witness=None,
            witness_margin=None,
            gram_offdiag=offdiag,
            field_note=note,
        )
    witness, margin = _greedy_violation(S)
    return CoordinateDecision(
        is_coordinate=False,
        index_set=None,
        witness=witness,
        witness_margin=margin,
        gram_offdiag=offdiag,
        field_note=note,
    )


def greedy_phase_witness(S: Subspace) -> tuple[ConstantModulusVector, float]:
    """Greedy unit phases c and the value ||P((1/sqrt(n)) sum c_i e_i)||.

    c_1 = 1; each later c_k maximizes Re conj(c_k) <z, Pe_k> over |c_k| = 1
    (sign of the inner product for real scalars, +1 on ties), where z is the
    running sum of chosen c_j Pe_j. The value squared is at least s/n, with
    strict excess whenever the projected basis is not orthogonal.
    """
    n = S.ambient_dim
    pe = S.projector
    if S.field == REAL:
        phases = np.empty(n)
        phases[0] = 1.0
        z = pe[:, 0].copy()
        for k in range(1, n):
            t = float(np.dot(z, pe[:, k]))
            ck = 1.0 if t >= 0.0 else -1.0
            phases[k] = ck
            z += ck * pe[:, k]
    else:
        phases = np.empty(n, dtype=np.complex128)
        phases[0] = 1.0
        z = pe[:, 0].astype(np.complex128)
        for k in range(1, n):
            t = complex(np.vdot(pe[:, k], z))  # <z, Pe_k>
            ck = t / abs(t) if abs(t) > 0.0 else 1.0 + 0.0j
            phases[k] = ck
            z += ck * pe[:, k]
    value = float(np.linalg.norm(z)) / math.sqrt(n)
    return ConstantModulusVector(phases, S.field), value


def _greedy_violation(S: Subspace) -> tuple[Vector, float]:
    """Unit vector of S in the greedy direction, with its l1 margin over sqrt(dim)."""
    cm, _ = greedy_phase_witness(S)
    z = S.projector @ (cm.phases / math.sqrt(S.ambient_dim))
    w = Vector(z / np.linalg.norm(z), S.field)
    margin = norm1(w) - math.sqrt(S.dim) * norm2(w)
    return w, margin


def scan_l1_bound(S: Subspace, samples: int = 200, seed: int = 0) -> L1BoundScan:
    """Hunt for unit vectors of S with ||y||_1 > sqrt(s) ||y||_2.

    The greedy direction is always checked first (random unit vectors alone
    can miss violations); then `samples` seeded random unit vectors of S.
    Returns the first violator found, or holds_on_samples.
    """
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    sqrt_s = math.sqrt(S.dim)
    candidates_checked = 0

    w, margin = _greedy_violation(S)
    candidates_checked += 1
    if margin > VIOLATION_TOL:
        return L1BoundScan(False, w, margin, candidates_checked)

    rng = np.random.default_rng(seed)
    s = S.dim
    for _ in range(samples):
        if S.field == REAL:
            u = rng.standard_normal(s)
        else:
            u = rng.standard_normal(s) + 1j * rng.standard_normal(s)
        nu = np.linalg.norm(u)
        if nu == 0.0:
            continue
        y = Vector(S.basis @ (u / nu), S.field)
        candidates_checked += 1
        m = norm1(y) - sqrt_s * norm2(y)
        if m > VIOLATION_TOL:
            return L1BoundScan(False, y, m, candidates_checked)
    return L1BoundScan(True, None, None, candidates_checked)
