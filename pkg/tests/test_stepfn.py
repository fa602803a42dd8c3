import math

import numpy as np
import pytest

from l1l2 import (
    DomainError,
    NormalizationError,
    StepFunction,
    UndefinedConstantError,
    Vector,
    lp_norm,
    normalize,
    parallelogram_check,
    peakiness,
    tightness_constant,
    vector_to_step,
)
from helpers import random_step_function, random_vector

SQRT2 = math.sqrt(2.0)

ONE = StepFunction([0.0, 1.0], [1.0])
HALF = StepFunction([0.0, 0.5, 1.0], [SQRT2, 0.0])
QUARTER = StepFunction([0.0, 0.25, 1.0], [2.0, 0.0])


def test_lp_norm_examples():
    assert lp_norm(ONE, 1) == 1.0 and lp_norm(ONE, 2) == 1.0
    assert abs(lp_norm(HALF, 2) - 1.0) < 1e-15
    assert abs(lp_norm(HALF, 1) - SQRT2 / 2) < 1e-15
    assert abs(lp_norm(QUARTER, 2) - 1.0) < 1e-15
    assert lp_norm(QUARTER, 1) == 0.5
    with pytest.raises(ValueError):
        lp_norm(ONE, 3)


def test_peakiness_examples():
    assert peakiness(ONE) == 0.0
    assert abs(peakiness(HALF) - (2 - SQRT2)) < 1e-12
    assert abs(peakiness(QUARTER) - 1.0) < 1e-12


def test_parallelogram_examples():
    lhs, rhs = parallelogram_check(ONE)
    assert lhs == 4.0 and abs(rhs - 4.0) < 1e-12
    lhs, rhs = parallelogram_check(HALF)
    assert abs(rhs - ((2 - SQRT2) + (2 + SQRT2))) < 1e-12
    lhs, rhs = parallelogram_check(QUARTER)
    assert abs(rhs - (1.0 + 3.0)) < 1e-12


def test_vector_to_step_examples():
    f = vector_to_step(Vector([1 / SQRT2, 1 / SQRT2]))
    assert np.allclose(f.values, [1.0, 1.0], atol=1e-15)
    assert peakiness(f) < 1e-12

    f = vector_to_step(Vector([1, 0, 0, 0]))
    assert np.allclose(f.values, [2.0, 0.0, 0.0, 0.0], atol=1e-15)
    assert abs(peakiness(f) - 1.0) < 1e-12

    f = vector_to_step(Vector([3, 4]))
    assert abs(peakiness(f) - tightness_constant(Vector([3, 4]))) < 1e-10

    with pytest.raises(UndefinedConstantError):
        vector_to_step(Vector([0.0, 0.0]))


def test_construction_and_domain_errors():
    with pytest.raises(ValueError):
        StepFunction([0.0, 0.5], [1.0, 2.0])  # length mismatch
    with pytest.raises(ValueError):
        StepFunction([0.1, 1.0], [1.0])  # does not start at 0
    with pytest.raises(ValueError):
        StepFunction([0.0, 0.9], [1.0])  # does not end at 1
    with pytest.raises(ValueError):
        StepFunction([0.0, 0.5, 0.5, 1.0], [1.0, 1.0, 1.0])  # not increasing
    with pytest.raises(DomainError):
        StepFunction([0.0, 1.0], [-0.5])  # negative value rejected, not clamped


def test_unit_norm_enforcement():
    f = StepFunction([0.0, 1.0], [2.0])
    with pytest.raises(NormalizationError, match="2.0"):
        peakiness(f)
    with pytest.raises(NormalizationError):
        parallelogram_check(f)
    g = normalize(f)
    assert abs(lp_norm(g, 2) - 1.0) < 1e-15
    assert peakiness(g) == 0.0
    with pytest.raises(DomainError):
        normalize(StepFunction([0.0, 1.0], [0.0]))


def test_identity_suite():
    rng = np.random.default_rng(51)
    for _ in range(100):
        f = random_step_function(rng)
        c = peakiness(f)
        assert abs(c - (2 - 2 * lp_norm(f, 1))) <= 1e-10
        lhs, rhs = parallelogram_check(f)
        assert abs(lhs - rhs) <= 1e-10
        assert -1e-12 <= c <= 2.0 + 1e-12


def test_peakiness_zero_iff_constant_one():
    rng = np.random.default_rng(52)
    assert peakiness(ONE) == 0.0
    for _ in range(50):
        f = random_step_function(rng)
        c = peakiness(f)
        # c is the squared L2 distance to the constant function 1
        dev = math.fsum((f.values - 1.0) ** 2 * f.widths)
        assert abs(c - dev) <= 1e-12
        if c < 1e-12:
            assert dev < 1e-12


def test_bridge_property():
    rng = np.random.default_rng(53)
    for field in ("real", "complex"):
        for _ in range(100):
            x = random_vector(rng, int(rng.integers(1, 40)), field)
            assert abs(peakiness(vector_to_step(x)) - tightness_constant(x)) <= 1e-10


def test_values_are_immutable():
    with pytest.raises(ValueError):
        ONE.values[0] = 3.0
