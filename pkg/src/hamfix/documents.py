"""Canonical JSON documents for fixed point data.

The on-disk form is UTF-8 JSON with keys ``n``, ``points`` and an
optional ``meta`` object.  Each point is ``{"phi": <string>, "weights":
[<int>...]}``.  Moment values travel as strings ("5", "-2", "3/2") so
exactness survives the trip; bare JSON numbers are accepted on input
only when integral.  Writing always canonicalizes: points sorted by
moment value, weights ascending, two-space indentation, trailing
newline.  Parsing checks structure only; value-level validation is the
job of the ``check`` command.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .core import FixedPoint, FixedPointData
from .errors import ParseError, StructureError


@dataclass(frozen=True)
class InputDocument:
    data: FixedPointData
    meta: dict | None = None


def _parse_phi(value: Any, path: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(path, "expected a rational string or integer, got a bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value.is_integer():
            return Fraction(int(value))
        raise ParseError(path, f"non-integral number {value!r}; use a \"p/q\" string")
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(path, f"not a rational \"p/q\" string: {exc}") from None
    raise ParseError(path, f"expected a rational string or integer, got {type(value).__name__}")


def _parse_weight(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(path, f"expected an integer weight, got {value!r}")
    return value


def document_from_json(obj: Any) -> InputDocument:
    """Build a document from already-decoded JSON, naming bad paths."""
    if not isinstance(obj, dict):
        raise ParseError("$", f"expected an object, got {type(obj).__name__}")
    unknown = set(obj) - {"n", "points", "meta"}
    if unknown:
        raise ParseError(sorted(unknown)[0], "unknown key")

    n = obj.get("n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParseError("n", f"expected a positive integer, got {n!r}")
    if n < 1:
        raise ParseError("n", f"expected a positive integer, got {n}")

    raw_points = obj.get("points")
    if not isinstance(raw_points, list):
        raise ParseError("points", "expected an array of points")
    if len(raw_points) != n + 1:
        raise ParseError("points", f"expected {n + 1} points for n = {n}, got {len(raw_points)}")

    points = []
    for i, entry in enumerate(raw_points):
        base = f"points[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(base, "expected an object with phi and weights")
        unknown = set(entry) - {"phi", "weights"}
        if unknown:
            raise ParseError(f"{base}.{sorted(unknown)[0]}", "unknown key")
        if "phi" not in entry:
            raise ParseError(f"{base}.phi", "missing")
        phi = _parse_phi(entry["phi"], f"{base}.phi")
        raw_weights = entry.get("weights")
        if not isinstance(raw_weights, list):
            raise ParseError(f"{base}.weights", "expected an array of integers")
        if len(raw_weights) != n:
            raise ParseError(
                f"{base}.weights", f"expected {n} weights for n = {n}, got {len(raw_weights)}"
            )
        weights = tuple(
            _parse_weight(w, f"{base}.weights[{k}]") for k, w in enumerate(raw_weights)
        )
        points.append(FixedPoint(i, phi, weights))

    meta = obj.get("meta")
    if meta is not None and not isinstance(meta, dict):
        raise ParseError("meta", "expected an object")

    try:
        data = FixedPointData(n, tuple(points))
    except StructureError as exc:
        raise ParseError("points", str(exc)) from None
    return InputDocument(data, meta)


def parse_document(text: str) -> InputDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("$", f"invalid JSON: {exc}") from None
    return document_from_json(obj)


def serialize_document(doc: InputDocument) -> str:
    """Canonical text form; stable byte-for-byte for equal documents.

    Points are sorted by moment value and rendered one per line; weights
    are already stored ascending.  meta keys are sorted.
    """
    pts = sorted(doc.data.points, key=lambda p: (p.moment_value, p.index))
    point_lines = ",\n".join(
        "    " + json.dumps({"phi": str(p.moment_value), "weights": list(p.weights)})
        for p in pts
    )
    text = "{\n" + f'  "n": {doc.data.n},\n' + '  "points": [\n' + point_lines + "\n  ]"
    if doc.meta is not None:
        text += ',\n  "meta": ' + json.dumps(doc.meta, sort_keys=True)
    return text + "\n}\n"


def load_document(path: str) -> InputDocument:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_document(handle.read())


def save_document(doc: InputDocument, path: str):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize_document(doc))
