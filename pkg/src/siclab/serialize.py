"""File formats and deterministic JSON output.

All files are JSON. Floats are printed with 17 significant digits, which
round-trips IEEE doubles losslessly, and keys keep insertion order, so a
given document always serializes to identical bytes. Fiducial vectors are
stored gauge-fixed (first nonzero component real nonnegative) as 2N reals
with re/im interleaved.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .linalg import StateVector

FIDUCIAL_FORMAT = "sic-fiducial/1"
ORBIT_FORMAT = "sic-orbit/1"
REPORT_FORMAT = "sic-report/1"
LOAD_NORM_TOL = 1e-9  # |norm - 1| allowed for vectors read from files


class FileFormatError(ValueError):
    """Raised when a document fails structural validation; the message
    carries a line or field diagnostic."""


def format_float(x: float) -> str:
    """17-significant-digit decimal form of a finite double."""
    if not math.isfinite(x):
        raise ValueError("cannot serialize a non-finite number")
    return format(float(x), ".17g")


def dumps(obj, indent: int = 0) -> str:
    """Serialize dicts/lists/str/bool/None/int/float to deterministic JSON."""
    pad = " " * indent
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f"{pad}  {json.dumps(str(k))}: {dumps(v, indent + 2)}"
            for k, v in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{pad}  {dumps(v, indent + 2)}" for v in obj)
        return "[\n" + items + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def write_document(path, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc) + "\n")


def state_to_reals(psi: StateVector) -> list[float]:
    """Interleaved [re_0, im_0, re_1, im_1, ...] components."""
    out = np.empty(2 * psi.dim)
    out[0::2] = psi.data.real
    out[1::2] = psi.data.imag
    return [float(v) for v in out]


def fiducial_document(dim: int, fiducial: StateVector, metadata: dict | None = None) -> dict:
    doc = {"format": FIDUCIAL_FORMAT, "dim": int(dim),
           "fiducial": state_to_reals(fiducial)}
    if metadata:
        doc["metadata"] = metadata
    return doc


def _require(doc: dict, field: str, kinds) -> object:
    if field not in doc:
        raise FileFormatError(f"field '{field}': missing")
    value = doc[field]
    if not isinstance(value, kinds) or isinstance(value, bool):
        raise FileFormatError(f"field '{field}': wrong type {type(value).__name__}")
    return value


def parse_state_reals(values, dim: int, field: str) -> StateVector:
    """Decode interleaved reals into a unit state, normalizing exactly after
    checking the stored norm is within LOAD_NORM_TOL of one."""
    if (not isinstance(values, list) or len(values) != 2 * dim
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in values)):
        raise FileFormatError(f"field '{field}': expected {2 * dim} numbers")
    arr = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise FileFormatError(f"field '{field}': entries must be finite")
    z = arr[0::2] + 1j * arr[1::2]
    nrm = float(np.linalg.norm(z))
    if abs(nrm - 1.0) > LOAD_NORM_TOL:
        raise FileFormatError(
            f"field '{field}': vector norm {nrm!r} is not within {LOAD_NORM_TOL} of 1")
    return StateVector(z / nrm)


def load_fiducial_file(path) -> tuple[int, StateVector, dict]:
    """Read and validate a fiducial file; returns (dim, state, metadata).

    Raises FileFormatError with a line/field diagnostic on malformed input;
    OS-level read failures propagate as OSError.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise FileFormatError("top level: expected a JSON object")
    fmt = _require(doc, "format", str)
    if fmt != FIDUCIAL_FORMAT:
        raise FileFormatError(f"field 'format': expected '{FIDUCIAL_FORMAT}', got '{fmt}'")
    dim = _require(doc, "dim", int)
    if dim < 1:
        raise FileFormatError(f"field 'dim': must be a positive integer, got {dim}")
    state = parse_state_reals(_require(doc, "fiducial", list), dim, "fiducial")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise FileFormatError("field 'metadata': expected an object")
    return dim, state, metadata


def report_document(vreport, sreport, metadata: dict | None = None) -> dict:
    """Merge a VerificationReport and a SimplexReport into one document."""
    pair = vreport.max_overlap_pair
    doc = {
        "format": REPORT_FORMAT,
        "dim": vreport.dim,
        "tolerance": vreport.tolerance,
        "pass": vreport.passed,
        "equiangularity_residual": vreport.equiangularity_residual,
        "identity_residual": vreport.identity_residual,
        "completeness_rank": vreport.completeness_rank,
        "frame_potential": vreport.frame_potential,
        "max_overlap": None if pair is None else
            {"i": pair[0], "j": pair[1], "value": vreport.max_overlap_value},
        "simplex": {
            "edge_min": sreport.edge_min,
            "edge_max": sreport.edge_max,
            "edge_mean": sreport.edge_mean,
            "edge_target": sreport.edge_target,
            "regular": sreport.regular,
            "regularity_tol": sreport.regularity_tol,
            "outsphere_radius": sreport.outsphere_radius,
            "center_distance_min": sreport.center_distance_min,
            "center_distance_max": sreport.center_distance_max,
        },
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def orbit_document(dim: int, states, metadata: dict | None = None) -> dict:
    doc = {"format": ORBIT_FORMAT, "dim": int(dim),
           "states": [state_to_reals(s) for s in states]}
    if metadata:
        doc["metadata"] = metadata
    return doc
