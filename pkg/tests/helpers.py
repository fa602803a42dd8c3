"""Shared corpus generators and an in-process CLI runner for the tests."""

from __future__ import annotations

import contextlib
import io
import sys

import numpy as np

from l1l2 import Vector, subspace_from_spanning_set
from l1l2.cli import main as cli_main


def random_vector(rng, n, field="real"):
    if field == "complex":
        a = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    else:
        a = rng.standard_normal(n)
    if not np.any(a):
        a.flat[0] = 1.0
    return Vector(a, field)


def random_subspace(rng, n, s, field="real"):
    """Random s-dim subspace of n-space, built through the spanning-set path."""
    if field == "complex":
        rows = rng.standard_normal((s, n)) + 1j * rng.standard_normal((s, n))
    else:
        rows = rng.standard_normal((s, n))
    return subspace_from_spanning_set([Vector(r, field) for r in rows])


def random_coordinate_subspace(rng, n, s):
    """Random coordinate subspace with a random orthonormal basis of the span."""
    idx = np.sort(rng.choice(n, size=s, replace=False))
    rows = np.zeros((s, n))
    rows[np.arange(s), idx] = 1.0
    if s > 1:
        q, _ = np.linalg.qr(rng.standard_normal((s, s)))
        rows = q @ rows  # rows stay supported on idx
    return tuple(int(i) for i in idx), subspace_from_spanning_set([Vector(r) for r in rows])


def random_step_function(rng, max_cells=64):
    """Random nonnegative unit-L2-norm step function on [0,1]."""
    from l1l2 import StepFunction, normalize

    m = int(rng.integers(1, max_cells + 1))
    interior = np.unique(rng.uniform(0.0, 1.0, size=m - 1)) if m > 1 else np.empty(0)
    interior = interior[(interior > 0.0) & (interior < 1.0)]
    breakpoints = np.concatenate(([0.0], interior, [1.0]))
    values = np.abs(rng.standard_normal(breakpoints.size - 1))
    if not np.any(values):
        values[0] = 1.0
    return normalize(StepFunction(breakpoints, values))


class _FakeStdin:
    def __init__(self, data: bytes):
        self.buffer = io.BytesIO(data)


def run_cli(argv, stdin: bytes = b"") -> tuple[int, str, str]:
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    sys.stdin = _FakeStdin(stdin)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli_main(list(argv))
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()
