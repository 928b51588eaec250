"""Tuple file format: JSON with complex entries as [re, im] pairs.

Layout:

    {
      "d": 2,
      "dim": 3,
      "matrices": [ [[[re,im], ...], ...], ... ],   # d entries, each dim x dim
      "metadata": {"name": ..., "seed": ..., "construction": {...}}
    }

Serialization uses Python's shortest round-trip float formatting, so
write -> read is bit-exact on the numeric payload.  A file that parses
structurally but fails the commutation invariant does not load.
"""

import json

import numpy as np

from .defect import TOL_COMM, MultiOperator
from .errors import ParseError

FORMAT_KEYS = {"d", "dim", "matrices", "metadata"}


def matrix_to_json(mat):
    """Nested-list [re, im] encoding of one matrix."""
    mat = np.asarray(mat, dtype=np.complex128)
    return [[[float(z.real), float(z.imag)] for z in row] for row in mat]


def matrix_from_json(rows, dim=None):
    try:
        mat = np.array([[complex(c[0], c[1]) for c in row] for row in rows],
                       dtype=np.complex128)
    except (TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"bad matrix entry: {exc}") from exc
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ParseError(f"matrix is not square: shape {mat.shape}")
    if dim is not None and mat.shape != (dim, dim):
        raise ParseError(f"matrix shape {mat.shape} does not match dim {dim}")
    return mat


def tuple_to_dict(op, metadata=None):
    out = {"d": op.d, "dim": op.dim,
           "matrices": [matrix_to_json(m) for m in op.matrices]}
    if metadata:
        out["metadata"] = metadata
    return out


def tuple_from_dict(data, tol_comm=TOL_COMM):
    """Parse a tuple dict; returns (MultiOperator, metadata).

    Raises ParseError for structural problems and CommutationViolated when
    the matrices do not commute within tolerance.
    """
    if not isinstance(data, dict):
        raise ParseError("tuple file must be a JSON object")
    unknown = set(data) - FORMAT_KEYS
    if unknown:
        raise ParseError(f"unknown keys in tuple file: {sorted(unknown)}")
    try:
        d = int(data["d"])
        dim = int(data["dim"])
        raw = data["matrices"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"missing or malformed field: {exc}") from exc
    if not isinstance(raw, list) or len(raw) != d:
        raise ParseError(f"expected {d} matrices, got "
                         f"{len(raw) if isinstance(raw, list) else type(raw)}")
    mats = [matrix_from_json(rows, dim) for rows in raw]
    metadata = data.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise ParseError("metadata must be an object")
    return MultiOperator(mats, tol_comm=tol_comm), metadata


def write_tuple(path, op, metadata=None):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(tuple_to_dict(op, metadata), fh, indent=1)
        fh.write("\n")


def read_tuple(path, tol_comm=TOL_COMM):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return tuple_from_dict(data, tol_comm=tol_comm)
