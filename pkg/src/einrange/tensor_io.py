"""Serialization: the JSON tensor interchange format, CSV emitters, and a
deterministic JSON report writer.

Tensor files look like::

    {"row_shape": [2, 2], "col_shape": [2],
     "order": "col-major",
     "data": [[re, im], ...]}

with ``data`` flat in column-major order over the concatenated
(row, col) multi-index.  Reports and CSVs print every float with 17
significant digits so identical inputs give byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import FormatError
from .tensor import DenseTensor

__all__ = [
    "load_tensor",
    "loads_tensor",
    "dump_tensor",
    "tensor_to_obj",
    "write_boundary_csv",
    "write_samples_csv",
    "dumps_report",
    "write_report",
    "file_digest",
    "format_float",
    "format_complex",
]


def format_float(x: float) -> str:
    return "%.17g" % float(x)


def format_complex(z: complex, digits: int = 12) -> str:
    """Compact a+bi rendering for human-facing output (e.g. "2+0i")."""
    fmt = "%%.%dg%%+.%dgi" % (digits, digits)
    return fmt % (z.real, z.imag)


def tensor_to_obj(t: DenseTensor) -> dict:
    return {
        "row_shape": list(t.row_shape),
        "col_shape": list(t.col_shape),
        "order": "col-major",
        "data": [[z.real, z.imag] for z in t.flat()],
    }


def _obj_to_tensor(obj) -> DenseTensor:
    if not isinstance(obj, dict):
        raise FormatError("tensor JSON must be an object")
    for key in ("row_shape", "col_shape", "order", "data"):
        if key not in obj:
            raise FormatError(f"tensor JSON missing key {key!r}")
    if obj["order"] != "col-major":
        raise FormatError(
            f"unsupported linearization order {obj['order']!r} "
            "(only 'col-major' is defined)"
        )
    try:
        row_shape = [int(d) for d in obj["row_shape"]]
        col_shape = [int(d) for d in obj["col_shape"]]
        data = [complex(float(re), float(im)) for re, im in obj["data"]]
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed tensor JSON: {exc}") from exc
    return DenseTensor.from_flat(row_shape, col_shape, data)


def loads_tensor(text: str) -> DenseTensor:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return _obj_to_tensor(obj)


def load_tensor(path) -> DenseTensor:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    try:
        return loads_tensor(text)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _serialize(obj, out: list[str]):
    """Deterministic JSON with %.17g floats (keys in insertion order)."""
    if isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(k)))
            out.append(": ")
            _serialize(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _serialize(v, out)
        out.append("]")
    elif isinstance(obj, (bool, np.bool_)) or obj is None:
        out.append(json.dumps(bool(obj)) if obj is not None else "null")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_float(float(obj)))
    elif isinstance(obj, (complex, np.complexfloating)):
        _serialize([obj.real, obj.imag], out)
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    else:
        raise FormatError(f"cannot serialize {type(obj).__name__}")


def dumps_report(obj: dict) -> str:
    parts: list[str] = []
    _serialize(obj, parts)
    return "".join(parts) + "\n"


def write_report(obj: dict, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_report(obj))


def dump_tensor(t: DenseTensor, path):
    write_report(tensor_to_obj(t), path)


def write_boundary_csv(path, boundary: Sequence[tuple[float, complex]]):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        _boundary_csv(fh, boundary)


def _boundary_csv(fh: IO[str], boundary):
    fh.write("theta,re,im\n")
    for theta, point in boundary:
        fh.write(
            f"{format_float(theta)},{format_float(point.real)},"
            f"{format_float(point.imag)}\n"
        )


def write_samples_csv(path, samples: Iterable[complex]):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("re,im\n")
        for z in samples:
            fh.write(f"{format_float(z.real)},{format_float(z.imag)}\n")


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()
