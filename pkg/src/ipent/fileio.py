"""State/operator files and report serialization.

State file (JSON)::

    {"statistics": "boson" | "fermion" | "single",
     "modes": N,
     "label": "optional text",
     "matrix": [[{"re": x, "im": y}, ...], ...]}     # boson / fermion
     "vector": [{"re": x, "im": y}, ...]             # single

Operator file: ``{"operator": "one-body", "modes": N, "label": ..., "matrix": ...}``
with a hermitian matrix ``f`` for ``F = sum f_ij a_i^+ a_j``.

Reports are JSON objects whose keys are written in a fixed order; floats use
Python's shortest round-trip repr (at most 17 significant digits) and
``-0.0`` is written as ``0.0``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .correlation import OneBodyOperator
from .errors import InvalidInput, IpentError
from .states import SingleParticleState, TwoBosonState, TwoFermionState, normalize

STATISTICS = ("boson", "fermion", "single")


class FileFormatError(IpentError):
    pass


@dataclass(frozen=True)
class LoadedState:
    state: object
    label: str
    path: str


def _complex(entry, where):
    if isinstance(entry, dict):
        if set(entry) - {"re", "im"}:
            raise FileFormatError(f"{where}: unexpected keys {sorted(set(entry) - {'re', 'im'})}")
        re, im = entry.get("re", 0.0), entry.get("im", 0.0)
    elif isinstance(entry, (int, float)) and not isinstance(entry, bool):
        re, im = entry, 0.0
    else:
        raise FileFormatError(f"{where}: expected {{re, im}} or a number, got {entry!r}")
    for part in (re, im):
        if isinstance(part, bool) or not isinstance(part, (int, float)) or not math.isfinite(part):
            raise FileFormatError(f"{where}: bad number {part!r}")
    return complex(re, im)


def _matrix(doc, n, where):
    rows = doc.get("matrix")
    if not isinstance(rows, list) or len(rows) != n:
        raise FileFormatError(f"{where}: 'matrix' must be a list of {n} rows")
    out = np.zeros((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise FileFormatError(f"{where}: row {i} must have {n} entries")
        for j, entry in enumerate(row):
            out[i, j] = _complex(entry, f"{where}[{i}][{j}]")
    return out


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise FileFormatError(f"{path}: top level must be an object")
    return doc


def _modes(doc, where):
    n = doc.get("modes")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise FileFormatError(f"{where}: 'modes' must be a positive integer")
    return n


def parse_state(doc, where="state", do_normalize=True):
    stats = doc.get("statistics")
    if stats not in STATISTICS:
        raise FileFormatError(f"{where}: 'statistics' must be one of {STATISTICS}")
    n = _modes(doc, where)
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise FileFormatError(f"{where}: 'label' must be a string")
    try:
        if stats == "single":
            vec = doc.get("vector")
            if not isinstance(vec, list) or len(vec) != n:
                raise FileFormatError(f"{where}: 'vector' must have {n} entries")
            state = SingleParticleState([_complex(e, f"{where}[{i}]") for i, e in enumerate(vec)])
        elif stats == "boson":
            state = TwoBosonState(_matrix(doc, n, where))
        else:
            state = TwoFermionState(_matrix(doc, n, where))
    except FileFormatError:
        raise
    except InvalidInput as exc:
        raise FileFormatError(f"{where}: {exc}") from exc
    except IpentError as exc:
        raise FileFormatError(f"{where}: {exc}") from exc
    return (normalize(state) if do_normalize else state), label


def load_state(path, do_normalize=True):
    doc = _read_json(path)
    state, label = parse_state(doc, str(path), do_normalize)
    return LoadedState(state, label or Path(path).stem, str(path))


def load_operator(path):
    doc = _read_json(path)
    if doc.get("operator") != "one-body":
        raise FileFormatError(f"{path}: not a one-body operator file")
    n = _modes(doc, str(path))
    try:
        op = OneBodyOperator(_matrix(doc, n, str(path)))
    except IpentError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc
    return op, doc.get("label") or Path(path).stem


def state_document(state, label=""):
    doc = {"statistics": state.statistics, "modes": state.modes, "label": label}
    if isinstance(state, SingleParticleState):
        doc["vector"] = [encode_complex(c) for c in state.vector]
    else:
        doc["matrix"] = encode_matrix(state.omega)
    return doc


def operator_document(op, label=""):
    return {"operator": "one-body", "modes": op.modes, "label": label,
            "matrix": encode_matrix(op.f)}


def _clean_float(x):
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x} in report")
    return 0.0 if x == 0.0 else x


def encode_complex(z):
    z = complex(z)
    return {"re": _clean_float(z.real), "im": _clean_float(z.imag)}


def encode_matrix(m):
    return [[encode_complex(z) for z in row] for row in np.asarray(m)]


def encode_floats(values):
    return [_clean_float(v) for v in np.asarray(values, dtype=float).ravel()]


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _clean_float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return encode_complex(obj)
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    return obj


def dumps_report(report):
    return json.dumps(_plain(report), indent=2, allow_nan=False) + "\n"


def write_report(report, path):
    Path(path).write_text(dumps_report(report), encoding="utf-8")


def write_document(doc, path):
    Path(path).write_text(json.dumps(_plain(doc), indent=2) + "\n", encoding="utf-8")
