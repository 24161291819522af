"""Matrix interchange documents.

A matrix travels as a JSON object with fields ``rows``, ``cols``, ``backend``
and ``entries`` (row-major, length rows*cols).  Exact entries are scalar
strings like ``"1/2-3/4i"`` and round-trip bit-exactly; approx entries are
two-element ``[re, im]`` arrays.

An instance bundle is a JSON object naming the rule tag, the scalar ``lambda``
in exact syntax, the role matrices (inline objects or file paths relative to
the bundle), and, for Pierce-split rules, the idempotent ``p``.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .matrices import APPROX, EXACT, Matrix
from .scalars import format_scalar, parse_scalar

ROLES_BY_THEOREM = {
    "L23": ("a", "b"),
    "T24": ("a", "b"),
    "T31": ("x",),
    "C32": ("x",),
    "T33": ("x",),
    "C34": ("x",),
    "T41": ("A", "B", "C", "D"),
    "C42": ("A", "B", "C", "D"),
    "T43": ("A", "B", "C", "D"),
    "C44": ("A", "B", "C", "D"),
}

PIERCE_THEOREMS = ("T31", "C32", "T33", "C34")


def matrix_to_obj(m: Matrix) -> dict:
    if m.backend == EXACT:
        entries = [format_scalar(e) for e in m.entries]
    else:
        entries = [[e.real, e.imag] for e in m.entries]
    return {"rows": m.rows, "cols": m.cols, "backend": m.backend, "entries": entries}


def matrix_from_obj(obj) -> Matrix:
    if not isinstance(obj, dict):
        raise ValueError("matrix document must be an object")
    try:
        rows, cols, backend, entries = obj["rows"], obj["cols"], obj["backend"], obj["entries"]
    except KeyError as exc:
        raise ValueError(f"matrix document missing field {exc}") from exc
    if backend not in (EXACT, APPROX):
        raise ValueError(f"unknown backend {backend!r}")
    if not isinstance(entries, list) or not isinstance(rows, int) or not isinstance(cols, int):
        raise ValueError("malformed matrix document")
    if len(entries) != rows * cols:
        raise ValueError("entry count does not match rows*cols")
    if backend == EXACT:
        parsed = [parse_scalar(e) if isinstance(e, str) else _reject(e) for e in entries]
    else:
        parsed = [_approx_entry(e) for e in entries]
    return Matrix(rows, cols, tuple(parsed), backend)


def _reject(entry):
    raise ValueError(f"exact entries must be scalar strings, got {type(entry).__name__}")


def _approx_entry(entry):
    if (
        not isinstance(entry, list)
        or len(entry) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
    ):
        raise ValueError("approx entries must be [re, im] number pairs")
    if not all(math.isfinite(v) for v in entry):
        raise ValueError("approx entries must be finite")
    return complex(entry[0], entry[1])


def save_matrix(m: Matrix, path) -> None:
    Path(path).write_text(json.dumps(matrix_to_obj(m), indent=1) + "\n")


def load_matrix(path) -> Matrix:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON: {exc}") from exc
    return matrix_from_obj(obj)


# -- instance bundles ---------------------------------------------------------


def bundle_to_obj(theorem: str, mats: dict, lam=None, p=None) -> dict:
    obj = {"theorem": theorem, "matrices": {k: matrix_to_obj(v) for k, v in mats.items()}}
    if lam is not None:
        obj["lambda"] = format_scalar(lam) if not isinstance(lam, str) else lam
    if p is not None:
        obj["p"] = matrix_to_obj(p)
    return obj


def load_bundle(path):
    """Read a bundle file; returns (theorem, matrices dict, lam or None, p or None)."""
    base = Path(path)
    try:
        obj = json.loads(base.read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON: {exc}") from exc
    return bundle_from_obj(obj, base.parent)


def bundle_from_obj(obj, rel_dir: Path | None = None):
    if not isinstance(obj, dict):
        raise ValueError("bundle must be a JSON object")
    theorem = obj.get("theorem")
    if theorem not in ROLES_BY_THEOREM:
        raise ValueError(f"unknown or missing rule tag {theorem!r}")
    raw = obj.get("matrices")
    if not isinstance(raw, dict):
        raise ValueError("bundle missing 'matrices' object")
    roles = ROLES_BY_THEOREM[theorem]
    mats = {}
    for role in roles:
        if role not in raw:
            raise ValueError(f"bundle missing matrix {role!r} for {theorem}")
        mats[role] = _resolve_matrix(raw[role], rel_dir)
    lam = None
    if "lambda" in obj and obj["lambda"] is not None:
        if not isinstance(obj["lambda"], str):
            raise ValueError("lambda must be an exact scalar string")
        lam = parse_scalar(obj["lambda"])
    p = None
    if theorem in PIERCE_THEOREMS:
        if "p" not in obj:
            raise ValueError(f"{theorem} bundle requires an idempotent 'p'")
        p = _resolve_matrix(obj["p"], rel_dir)
    return theorem, mats, lam, p


def _resolve_matrix(entry, rel_dir: Path | None) -> Matrix:
    if isinstance(entry, str):
        path = Path(entry)
        if rel_dir is not None and not path.is_absolute():
            path = rel_dir / path
        return load_matrix(path)
    return matrix_from_obj(entry)
