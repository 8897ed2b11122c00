"""JSON encodings for relations, test cases and verification reports.

Complex numbers are written as ``[re, im]`` pairs in both fields.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import DimensionError
from .relation import LinearRelation, make_relation
from .subspace import DEFAULT_TOL, FIELDS

SCHEMA_VERSION = 1


def encode_vector(v):
    v = np.asarray(v)
    return [[float(z.real), float(z.imag)] for z in v.astype(np.complex128)]


def decode_vector(pairs, length=None, field="complex"):
    try:
        arr = np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise DimensionError(f"malformed vector entry: {exc}") from None
    if length is not None and arr.shape[0] != length:
        raise DimensionError(f"vector has length {arr.shape[0]}, expected {length}")
    if field == "real":
        if np.any(arr.imag != 0):
            raise DimensionError("nonzero imaginary part in a real-field file")
        return arr.real
    return arr


def relation_to_dict(T):
    B = T.graph.basis
    return {
        "field": T.field,
        "n": T.n,
        "m": T.m,
        "tol": T.tol,
        "generators": [
            {"x": encode_vector(B[: T.n, j]), "y": encode_vector(B[T.n :, j])}
            for j in range(B.shape[1])
        ],
    }


def relation_from_dict(d):
    try:
        field, n, m = d["field"], int(d["n"]), int(d["m"])
        gens = d["generators"]
    except (KeyError, TypeError) as exc:
        raise DimensionError(f"relation file is missing {exc}") from None
    if field not in FIELDS:
        raise DimensionError(f"unknown field {field!r}")
    if n <= 0 or m <= 0:
        raise DimensionError("n and m must be positive")
    tol = float(d.get("tol", DEFAULT_TOL))
    pairs = [(decode_vector(g["x"], n, field), decode_vector(g["y"], m, field)) for g in gens]
    return make_relation(pairs, n, m, tol, field)


def read_relation(path):
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DimensionError(f"{path}: not valid JSON ({exc})") from None
    return relation_from_dict(data)


def write_json(obj, path=None):
    text = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if path is None:
        return text
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


def encode_case(case):
    """Case = {"relations": {name: LinearRelation}, "vectors": {name: array}, "params": {...}}."""
    return {
        "relations": {k: relation_to_dict(v) for k, v in case.get("relations", {}).items()},
        "vectors": {k: encode_vector(v) for k, v in case.get("vectors", {}).items()},
        "params": dict(case.get("params", {})),
    }


def decode_case(data):
    return {
        "relations": {k: relation_from_dict(v) for k, v in data.get("relations", {}).items()},
        "vectors": {k: decode_vector(v) for k, v in data.get("vectors", {}).items()},
        "params": dict(data.get("params", {})),
    }
