"""JSON link documents.

Accepted shapes::

    {"kind": "knot", "seifert": [[-1, 1], [0, -1]]}
    {"kind": "boundary_link", "r": 2, "matrix": [[...]]}
    {"kind": "whitehead2", "n": 1, "a1": 1, "a2": -1}
    {"kind": "whitehead3", "n": [0, 2, 2], "a": [1, -1, 1]}
    {"kind": "parallel", "p": 2, "n": 1, "of": {"kind": "knot", ...}}
    {"kind": "ln", "n": 2}

Every document may carry a ``label``.  A ``hermitian`` matrix of polynomial
strings and a ``claimed_genus`` may be attached for certificate checks.
``ln`` documents describe the Alexander module of the link L_n directly;
they have no Seifert matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .alexander import PresentedModule, ln_family_module, presentation
from .errors import MatrixShapeError, SchemaError
from .matrix import LambdaMatrix
from .seifert import (
    BoundarySeifertSystem,
    internal_band_sum,
    parallel_link,
    split_system,
    validate_boundary_system,
    validate_knot_seifert,
    whitehead_double_2,
    whitehead_double_3,
)

KINDS = ("knot", "boundary_link", "whitehead2", "whitehead3", "parallel", "ln")
_EXTRA = {"label", "hermitian", "claimed_genus", "expect"}
_FIELDS = {
    "knot": {"seifert"},
    "boundary_link": {"r", "matrix"},
    "whitehead2": {"n", "a1", "a2"},
    "whitehead3": {"n", "a"},
    "parallel": {"p", "n", "of"},
    "ln": {"n"},
}


@dataclass(frozen=True)
class LinkDocument:
    kind: str
    payload: dict = field(hash=False)
    label: str | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, **self.payload}
        if self.label is not None:
            out["label"] = self.label
        return out

    def render(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def is_module_only(self) -> bool:
        return self.kind == "ln"

    def system(self) -> BoundarySeifertSystem:
        """The boundary Seifert system described by this document."""
        p = self.payload
        if self.kind == "knot":
            return split_system(validate_knot_seifert(p["seifert"]), 1)
        if self.kind == "boundary_link":
            return validate_boundary_system(p["matrix"], p["r"])
        if self.kind == "whitehead2":
            return whitehead_double_2(p["n"], p["a1"], p["a2"])
        if self.kind == "whitehead3":
            return whitehead_double_3(*p["n"], *p["a"])
        if self.kind == "parallel":
            inner = from_json(p["of"]).system()
            return parallel_link(internal_band_sum(inner), p["p"], p["n"])
        raise SchemaError(f"{self.kind!r} documents carry no Seifert matrix")

    def module(self) -> PresentedModule:
        if self.kind == "ln":
            return ln_family_module(self.payload["n"])
        return presentation(self.system())

    def hermitian(self) -> LambdaMatrix | None:
        h = self.payload.get("hermitian")
        return None if h is None else LambdaMatrix.from_json(h)


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: expected an integer, got {value!r}")
    return value


def _int_matrix(value, where: str) -> list[list[int]]:
    if not isinstance(value, list) or any(not isinstance(r, list) for r in value):
        raise MatrixShapeError(f"{where}: expected a list of rows")
    n = len(value)
    for i, row in enumerate(value):
        if len(row) != n:
            raise MatrixShapeError(f"{where}: row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            _int(x, f"{where}[{i}][{j}]")
    return value


def from_json(data: Any, where: str = "document") -> LinkDocument:
    if not isinstance(data, dict):
        raise SchemaError(f"{where}: expected a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"{where}.kind: unknown kind {kind!r}, expected one of {', '.join(KINDS)}")
    required = _FIELDS[kind]
    missing = required - data.keys()
    if missing:
        raise SchemaError(f"{where}: missing field(s) {', '.join(sorted(missing))}")
    unknown = data.keys() - required - _EXTRA - {"kind"}
    if unknown:
        raise SchemaError(f"{where}: unknown field(s) {', '.join(sorted(unknown))}")

    payload = {k: data[k] for k in data if k not in ("kind", "label")}
    if kind == "knot":
        V = _int_matrix(data["seifert"], f"{where}.seifert")
        if len(V) % 2:
            raise MatrixShapeError(f"{where}.seifert: a knot Seifert matrix has even size, got {len(V)}")
    elif kind == "boundary_link":
        r = _int(data["r"], f"{where}.r")
        N = _int_matrix(data["matrix"], f"{where}.matrix")
        if r < 1 or (len(N) - (r - 1)) < 0 or (len(N) - (r - 1)) % 2:
            raise MatrixShapeError(f"{where}.matrix: size {len(N)} is not r - 1 + 2g for r = {r}")
    elif kind == "whitehead2":
        for k in ("n", "a1", "a2"):
            _int(data[k], f"{where}.{k}")
    elif kind == "whitehead3":
        for k in ("n", "a"):
            if not isinstance(data[k], list) or len(data[k]) != 3:
                raise SchemaError(f"{where}.{k}: expected a list of three integers")
            for i, x in enumerate(data[k]):
                _int(x, f"{where}.{k}[{i}]")
    elif kind == "parallel":
        for k in ("p", "n"):
            if _int(data[k], f"{where}.{k}") < 0:
                raise SchemaError(f"{where}.{k}: must be nonnegative")
        from_json(data["of"], f"{where}.of")
    elif kind == "ln":
        _int(data["n"], f"{where}.n")
    if "hermitian" in data:
        h = data["hermitian"]
        if not isinstance(h, list) or any(not isinstance(r, list) or len(r) != len(h) for r in h):
            raise MatrixShapeError(f"{where}.hermitian: expected a square matrix of polynomial strings")
        try:
            LambdaMatrix.from_json(h)
        except (ValueError, TypeError) as exc:
            raise SchemaError(f"{where}.hermitian: {exc}") from exc
    if "claimed_genus" in data:
        _int(data["claimed_genus"], f"{where}.claimed_genus")
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise SchemaError(f"{where}.label: expected a string")
    return LinkDocument(kind, payload, label)


def parse(text: str) -> LinkDocument:
    """Parse and validate a JSON link document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return from_json(data)
