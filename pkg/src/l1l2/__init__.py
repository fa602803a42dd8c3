"""Exact constants for the l1-l2 norm inequality.

For x in R^n or C^n the classical bound ||x||_1 <= sqrt(n) ||x||_2 is tight
exactly on constant-modulus vectors. This package computes the exact defect
c_x for every vector, the nearest constant-modulus vector, the sharp analog
for subspaces (with certified brute-force or heuristic phase maximization),
coordinate-subspace detection with explicit violating witnesses, and the
matching peakiness identity for nonnegative step functions on [0,1].

All values are immutable and all functions are pure, so everything is safe
to use from concurrent code.
"""

from .core import COMPLEX, REAL, Vector, as_vector, inner, norm1, norm2
from .coordinate import (
    CoordinateDecision,
    L1BoundScan,
    greedy_phase_witness,
    is_coordinate_subspace,
    scan_l1_bound,
)
from .errors import (
    DimensionMismatchError,
    DomainError,
    EmptySubspaceError,
    ExactSearchUnavailableError,
    FieldMismatchError,
    L1L2Error,
    NormalizationError,
    NoUniqueNearestError,
    UndefinedConstantError,
)
from .stepfn import (
    StepFunction,
    lp_norm,
    normalize,
    parallelogram_check,
    peakiness,
    vector_to_step,
)
from .subspace import (
    EXACT_SEARCH_CUTOFF,
    Subspace,
    SubspaceBoundReport,
    alternating_ascent,
    nearest_unit_in_subspace,
    project,
    subspace_constant,
    subspace_constant_exact,
    subspace_constant_heuristic,
    subspace_from_spanning_set,
    unit_vector_l1_bound,
)
from .tightness import (
    ConstantModulusVector,
    TightnessReport,
    analyze,
    nearest_constant_modulus,
    satisfies_sqrt_s_bound,
    tightness_constant,
)

__version__ = "0.1.0"

__all__ = [
    "COMPLEX",
    "REAL",
    "Vector",
    "as_vector",
    "inner",
    "norm1",
    "norm2",
    "ConstantModulusVector",
    "TightnessReport",
    "analyze",
    "nearest_constant_modulus",
    "satisfies_sqrt_s_bound",
    "tightness_constant",
    "EXACT_SEARCH_CUTOFF",
    "Subspace",
    "SubspaceBoundReport",
    "alternating_ascent",
    "nearest_unit_in_subspace",
    "project",
    "subspace_constant",
    "subspace_constant_exact",
    "subspace_constant_heuristic",
    "subspace_from_spanning_set",
    "unit_vector_l1_bound",
    "CoordinateDecision",
    "L1BoundScan",
    "greedy_phase_witness",
    "is_coordinate_subspace",
    "scan_l1_bound",
    "StepFunction",
    "lp_norm",
    "normalize",
    "parallelogram_check",
    "peakiness",
    "vector_to_step",
    "L1L2Error",
    "DimensionMismatchError",
    "DomainError",
    "EmptySubspaceError",
    "ExactSearchUnavailableError",
    "FieldMismatchError",
    "NormalizationError",
    "NoUniqueNearestError",
    "UndefinedConstantError",
]
