"""Command-line front end emitting deterministic JSON reports.

Subcommands: analyze-vector, analyze-subspace, detect-coordinate, peakiness.
Input is a kind-tagged JSON document (complex entries as [re, im] pairs) or,
for real vectors, a bare one-row CSV; from --input PATH or stdin. The report
goes to stdout with every float rendered at 17 significant digits, so the
same input, flags, and seed reproduce the same bytes. Diagnostics go to
stderr.

Exit codes: 0 success, 1 parse error, 2 domain error, 3 capability refusal.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .core import COMPLEX, REAL, Vector
from .coordinate import is_coordinate_subspace, scan_l1_bound
from .errors import ExactSearchUnavailableError, L1L2Error
from .stepfn import StepFunction, lp_norm, normalize, parallelogram_check, peakiness, vector_to_step
from .subspace import (
    Subspace,
    subspace_constant_exact,
    subspace_constant_heuristic,
    subspace_from_spanning_set,
)
from .tightness import analyze, satisfies_sqrt_s_bound

KINDS = ("vector", "subspace", "step_function")


class ParseError(Exception):
    """Malformed input document (exit code 1)."""


@dataclass(frozen=True)
class InputDocument:
    kind: str
    field: str
    entries: np.ndarray | None = None        # vector
    spanning: list[np.ndarray] | None = None  # subspace
    breakpoints: np.ndarray | None = None    # step_function
    values: np.ndarray | None = None


# ---------------------------------------------------------------- parsing

def _number(v, where: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"{where}: expected a number, got {v!r}")
    return float(v)


def _entry(v, field: str, where: str):
    if field == COMPLEX:
        if not (isinstance(v, list) and len(v) == 2):
            raise ParseError(f"{where}: complex entries must be [re, im] pairs")
        return complex(_number(v[0], where), _number(v[1], where))
    return _number(v, where)


def _entry_array(raw, field: str, where: str) -> np.ndarray:
    if not isinstance(raw, list) or not raw:
        raise ParseError(f"{where}: expected a nonempty array")
    dtype = np.complex128 if field == COMPLEX else np.float64
    return np.array([_entry(v, field, where) for v in raw], dtype=dtype)


def _parse_json_document(obj) -> InputDocument:
    if not isinstance(obj, dict):
        raise ParseError("JSON input must be an object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {KINDS}, got {kind!r}")
    field = obj.get("field", REAL)
    if field not in (REAL, COMPLEX):
        raise ParseError(f"field must be 'real' or 'complex', got {field!r}")
    if kind == "vector":
        return InputDocument(kind, field, entries=_entry_array(obj.get("entries"), field, "entries"))
    if kind == "subspace":
        rows = obj.get("vectors")
        if not isinstance(rows, list) or not rows:
            raise ParseError("vectors: expected a nonempty array of spanning vectors")
        spanning = [_entry_array(r, field, f"vectors[{i}]") for i, r in enumerate(rows)]
        if len({v.size for v in spanning}) != 1:
            raise ParseError("vectors: spanning vectors must share one length")
        return InputDocument(kind, field, spanning=spanning)
    # step_function
    if field != REAL:
        raise ParseError("step_function input must be real")
    t = obj.get("breakpoints")
    v = obj.get("values")
    if not isinstance(t, list) or len(t) < 2 or not isinstance(v, list) or not v:
        raise ParseError("step_function needs breakpoints (>= 2) and values (>= 1)")
    if len(t) != len(v) + 1:
        raise ParseError("need exactly one more breakpoint than values")
    bp = np.array([_number(x, "breakpoints") for x in t], dtype=np.float64)
    if bp[0] != 0.0 or bp[-1] != 1.0 or not np.all(np.diff(bp) > 0.0):
        raise ParseError("breakpoints must increase strictly from 0 to 1")
    vals = np.array([_number(x, "values") for x in v], dtype=np.float64)
    return InputDocument(kind, field, breakpoints=bp, values=vals)


def _parse_csv_vector(text: str) -> InputDocument:
    cells = [c.strip() for c in text.strip().split(",")]
    if not cells or any(c == "" for c in cells):
        raise ParseError("CSV vector: expected one row of comma-separated numbers")
    try:
        entries = np.array([float(c) for c in cells], dtype=np.float64)
    except ValueError as e:
        raise ParseError(f"CSV vector: {e}") from None
    if not np.all(np.isfinite(entries)):
        raise ParseError("CSV vector: entries must be finite")
    return InputDocument("vector", REAL, entries=entries)


def parse_document(raw: bytes) -> InputDocument:
    """Parse a kind-tagged JSON document, or a one-row CSV real vector."""
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"input is not UTF-8: {e}") from None
    if not text.strip():
        raise ParseError("empty input")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        obj = None
    if isinstance(obj, dict):
        return _parse_json_document(obj)
    try:
        return _parse_csv_vector(text)  # covers bare numbers like "5" too
    except ParseError:
        raise ParseError("input is neither a JSON document nor a CSV vector row") from None


# ---------------------------------------------------------- serialization

def dumps_deterministic(obj) -> str:
    """JSON with sorted keys and floats at 17 significant digits."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return repr(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite float in report: {obj}")
        return format(obj, ".17g")
    if isinstance(obj, dict):
        items = (f"{json.dumps(k)}:{dumps_deterministic(v)}" for k, v in sorted(obj.items()))
        return "{" + ",".join(items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps_deterministic(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _scalar_out(v, field: str):
    if field == COMPLEX:
        c = complex(v)
        return [float(c.real), float(c.imag)]
    return float(v)


def _array_out(arr, field: str) -> list:
    return [_scalar_out(v, field) for v in np.asarray(arr)]


# ------------------------------------------------------------- commands

def _doc_vector(doc: InputDocument) -> Vector:
    if doc.kind != "vector":
        raise ParseError(f"this command needs a vector input, got {doc.kind}")
    return Vector(doc.entries, doc.field)


def _doc_subspace(doc: InputDocument) -> Subspace:
    if doc.kind != "subspace":
        raise ParseError(f"this command needs a subspace input, got {doc.kind}")
    return subspace_from_spanning_set(
        [Vector(row, doc.field) for row in doc.spanning]
    )


def cmd_analyze_vector(doc: InputDocument, s: float | None) -> dict:
    x = _doc_vector(doc)
    rep = analyze(x)
    result = {
        "n": rep.n,
        "field": rep.field,
        "l1": rep.l1,
        "l2": rep.l2,
        "c_x": rep.c_x,
        "sharp_constant": 1.0 - rep.c_x / 2.0,
        "nearest_phases": _array_out(rep.nearest.phases, rep.field),
        "distance": rep.distance,
    }
    if s is not None:
        result["s"] = float(s)
        result["bound_satisfied"] = satisfies_sqrt_s_bound(x, s)
    return result


def cmd_analyze_subspace(doc: InputDocument, mode: str, restarts: int, seed: int) -> dict:
    S = _doc_subspace(doc)
    if mode == "exact":
        rep = subspace_constant_exact(S)
    else:
        rep = subspace_constant_heuristic(S, restarts=restarts, seed=seed)
    return {
        "ambient_dim": S.ambient_dim,
        "dim": S.dim,
        "field": S.field,
        "method": rep.method,
        "certified": rep.certified,
        "max_proj_norm": rep.max_proj_norm,
        "c": rep.c,
        "l1_bound": rep.max_proj_norm * math.sqrt(S.ambient_dim),
        "witness_phases": _array_out(rep.witness.phases, S.field),
    }


def cmd_detect_coordinate(doc: InputDocument, tol: float, samples: int, seed: int) -> dict:
    S = _doc_subspace(doc)
    decision = is_coordinate_subspace(S, tol)
    scan = scan_l1_bound(S, samples=samples, seed=seed)
    result = {
        "ambient_dim": S.ambient_dim,
        "dim": S.dim,
        "field": S.field,
        "verdict": decision.verdict,
        "gram_offdiag": decision.gram_offdiag,
        "index_set": None if decision.index_set is None
        else [i + 1 for i in decision.index_set],  # 1-based in reports
        "witness": None if decision.witness is None else {
            "vector": _array_out(decision.witness.data, S.field),
            "margin": decision.witness_margin,
        },
        "scan": {
            "holds_on_samples": scan.holds_on_samples,
            "samples_checked": scan.samples_checked,
            "margin": scan.margin,
            "witness": None if scan.witness is None
            else _array_out(scan.witness.data, S.field),
        },
    }
    if decision.field_note is not None:
        result["field_note"] = decision.field_note
    return result


def cmd_peakiness(doc: InputDocument, do_normalize: bool) -> dict:
    if doc.kind == "vector":
        f = vector_to_step(Vector(doc.entries, doc.field))
        source = "vector"
    elif doc.kind == "step_function":
        f = StepFunction(doc.breakpoints, doc.values)
        source = "step_function"
    else:
        raise ParseError("peakiness needs a step_function or vector input")
    normalized = False
    input_l2 = lp_norm(f, 2)
    if do_normalize:
        f = normalize(f)
        normalized = True
    c = peakiness(f)
    lhs, rhs = parallelogram_check(f)
    result = {
        "kind": source,
        "cells": f.cells,
        "l1": lp_norm(f, 1),
        "l2": lp_norm(f, 2),
        "peakiness": c,
        "parallelogram": {"lhs": lhs, "rhs": rhs, "residual": abs(lhs - rhs)},
        "normalized": normalized,
    }
    if normalized:
        result["input_l2"] = input_l2
    return result


# ----------------------------------------------------------------- main

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are parse errors: exit 1
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="l1l2", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--input", default="-", metavar="PATH",
                       help="input document path, or - for stdin (default)")

    p = sub.add_parser("analyze-vector", help="tightness constant and nearest constant-modulus vector")
    common(p)
    p.add_argument("--s", type=float, default=None,
                   help="also test ||x||_1 <= sqrt(s) ||x||_2")

    p = sub.add_parser("analyze-subspace", help="sharp subspace constant via sign/phase maximization")
    common(p)
    p.add_argument("--mode", choices=("exact", "heuristic"), default="heuristic")
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("detect-coordinate", help="decide coordinate subspace; construct a violating witness otherwise")
    common(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("peakiness", help="||f-1||_2^2 = 2 - 2||f||_1 for nonnegative unit-norm f")
    common(p)
    p.add_argument("--normalize", action="store_true",
                   help="rescale the input to unit L2 norm first")

    return parser


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read input: {e}") from None


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        raw = _read_input(args.input)
        doc = parse_document(raw)
        report = {
            "command": args.command,
            "version": __version__,
            "input_digest": "sha256:" + hashlib.sha256(raw).hexdigest(),
        }
        if args.command == "analyze-vector":
            report["result"] = cmd_analyze_vector(doc, args.s)
        elif args.command == "analyze-subspace":
            if args.restarts < 1:
                raise ParseError("--restarts must be >= 1")
            report["result"] = cmd_analyze_subspace(doc, args.mode, args.restarts, args.seed)
            if args.mode == "heuristic":
                report["seed"] = args.seed
                report["restarts"] = args.restarts
        elif args.command == "detect-coordinate":
            if args.samples < 1:
                raise ParseError("--samples must be >= 1")
            report["result"] = cmd_detect_coordinate(doc, args.tol, args.samples, args.seed)
            report["seed"] = args.seed
            report["samples"] = args.samples
        else:
            report["result"] = cmd_peakiness(doc, args.normalize)
    except ParseError as e:
        print(f"l1l2: parse error: {e}", file=sys.stderr)
        return 1
    except ExactSearchUnavailableError as e:
        print(f"l1l2: refused: {e}", file=sys.stderr)
        return 3
    except L1L2Error as e:
        print(f"l1l2: {e}", file=sys.stderr)
        return 2

    sys.stdout.write(dumps_deterministic(report) + "\n")
    return 0
