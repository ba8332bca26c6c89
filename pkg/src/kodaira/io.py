"""JSON problem files: schemas, canonical serialization and loaders.

Every document has the shape::

    {"schema_version": 1, "kind": ..., "id": ..., "description": ...,
     "payload": {...}, "expected": {...}}

``kind`` is one of ``virtual-fibration``, ``monodromy-problem``,
``generating-vector`` or ``enumeration-request``.  Unknown fields are
rejected everywhere.  Exact rationals are written as ``"p/q"`` strings and
integers of magnitude ``>= 2**53`` as decimal strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import jsonschema

from .abelian import FiniteAbelianGroup
from .fibration import FibrationComponent, InvariantRow, VirtualFibration
from .linalg import IntMatrix
from .monodromy import ComponentAction, MonodromyProblem, RealizationReport
from .surface import GeneratingVector, OrbifoldSignature, group_from_json

SCHEMA_VERSION = 1
JSON_INT_LIMIT = 2 ** 53


class SchemaError(ValueError):
    """A document failed schema validation or could not be decoded."""


# --- canonical encoding ------------------------------------------------------


def encode_number(x: int | Fraction) -> int | str:
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return f"{x.numerator}/{x.denominator}"
        x = x.numerator
    return x if abs(x) < JSON_INT_LIMIT else str(x)


def decode_number(x: int | str) -> Fraction:
    if isinstance(x, bool):
        raise SchemaError("booleans are not numbers")
    if isinstance(x, int):
        return Fraction(x)
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise SchemaError(f"not an exact rational: {x!r}") from exc


def canonical_dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from exc
    validate_document(doc)
    return doc


def load_path(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# --- schemas -----------------------------------------------------------------

_INT = {"type": "integer"}
_POS = {"type": "integer", "minimum": 1}
_RATIONAL = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}]}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _INT}}
_COORDS = {"type": "array", "items": _INT}
_ELEMENT = {"oneOf": [{"type": "string"}, {"type": "integer"}, _COORDS]}
_FACTORS = {"type": "array", "items": {"type": "integer", "minimum": 2}}


def _obj(props: dict, required: list[str]) -> dict:
    return {"type": "object", "properties": props, "required": required, "additionalProperties": False}


_ROW = _obj({k: _RATIONAL for k in ("g_B1", "g_F1", "g_B2", "g_F2", "c2", "c1_squared", "sigma", "slope")},
            ["g_B1", "g_F1", "g_B2", "g_F2", "c2", "c1_squared", "sigma", "slope"])

_FIB_GROUP = {"oneOf": [_obj({"invariant_factors": _FACTORS}, ["invariant_factors"]),
                        _obj({"order": _POS}, ["order"])]}

_FIBRATION = _obj({
    "b": {"type": "integer", "minimum": 2},
    "f": {"type": "integer", "minimum": 2},
    "group": _FIB_GROUP,
    "components": {"type": "array", "items": _obj(
        {"d": _POS, "e": _POS, "r": {"type": "integer", "minimum": 2}, "weight": _COORDS}, ["d", "e", "r"])},
    "etale_both_ways": {"type": "boolean"},
    "pullback_degree": _POS,
}, ["b", "f", "group", "components"])

_MONO_COMPONENT = {"oneOf": [
    _obj({"matrix": _MATRIX, "weight": _COORDS, "d": _POS, "e": _POS, "r": _POS, "note": {"type": "string"}},
         ["matrix", "weight"]),
    _obj({"push": _MATRIX, "lift": _MATRIX, "weight": _COORDS, "d": _POS, "e": _POS, "r": _POS,
          "note": {"type": "string"}}, ["push", "lift", "weight"]),
]}

_MONODROMY = _obj({
    "b": {"type": "integer", "minimum": 1},
    "f": {"type": "integer", "minimum": 1},
    "group": _obj({"invariant_factors": _FACTORS}, ["invariant_factors"]),
    "components": {"type": "array", "minItems": 1, "items": _MONO_COMPONENT},
    "etale_both_ways": {"type": "boolean"},
}, ["b", "f", "group", "components"])

_GROUP_MODEL = {"oneOf": [
    _obj({"abelian": _FACTORS}, ["abelian"]),
    _obj({"bundled": {"type": "string"}}, ["bundled"]),
    _obj({"name": {"type": "string"}, "order": _POS, "identity": _INT, "labels": {"type": "array", "items": {"type": "string"}},
          "table": {"type": "array", "items": _INT}, "description": {"type": "string"}}, ["order", "table"]),
]}

_GENVEC = _obj({
    "signature": _obj({"q": {"type": "integer", "minimum": 0},
                       "periods": {"type": "array", "items": {"type": "integer", "minimum": 2}}}, ["q", "periods"]),
    "group": _GROUP_MODEL,
    "alphas": {"type": "array", "items": _ELEMENT},
    "betas": {"type": "array", "items": _ELEMENT},
    "gammas": {"type": "array", "items": _ELEMENT},
    "elements": {"type": "array", "items": _ELEMENT},
    "cyclic_generator": _ELEMENT,
    "graph_problem": _obj({
        "coefficients": _FACTORS,
        "components": {"type": "array", "minItems": 1,
                       "items": _obj({"element": _ELEMENT, "weight": _COORDS}, ["element", "weight"])},
    }, ["coefficients", "components"]),
}, ["signature", "group", "alphas", "betas", "gammas"])

_ENUM = _obj({
    "enumerate": {"enum": ["graph", "sig4", "fpf", "nielsen"]},
    "sigma_max": {"type": "integer", "minimum": 0},
    "genus_max": {"type": "integer", "minimum": 2},
    "genus": {"type": "integer", "minimum": 2},
    "order": {"type": "integer", "minimum": 2},
}, ["enumerate"])

_EXPECTED = {
    "virtual-fibration": _obj({"sigma": _RATIONAL, "c2": _RATIONAL, "c1_squared": _RATIONAL,
                               "slope": _RATIONAL, "row": _ROW}, []),
    "monodromy-problem": _obj({"obstruction": _COORDS, "stabilizer_index": _POS, "minimal_degree": _POS,
                               "row": _ROW, "table_row": _POS}, []),
    "generating-vector": _obj({"cover_genus": _INT, "charpoly": _COORDS, "stabilizer_index": _POS}, []),
    "enumeration-request": _obj({"rows": _INT}, []),
}

_PAYLOAD = {
    "virtual-fibration": _FIBRATION,
    "monodromy-problem": _MONODROMY,
    "generating-vector": _GENVEC,
    "enumeration-request": _ENUM,
}


def _document_schema(kind: str) -> dict:
    return _obj({
        "schema_version": {"const": SCHEMA_VERSION},
        "kind": {"const": kind},
        "id": {"type": "string", "pattern": r"^[a-z0-9][a-z0-9-]*$"},
        "description": {"type": "string"},
        "payload": _PAYLOAD[kind],
        "expected": _EXPECTED[kind],
    }, ["schema_version", "kind", "payload"])


SCHEMAS = {kind: _document_schema(kind) for kind in _PAYLOAD}


def validate_document(doc: Any) -> None:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    kind = doc.get("kind")
    if kind not in SCHEMAS:
        raise SchemaError(f"unknown document kind {kind!r}")
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{where}: {exc.message}") from None


# --- payload -> objects ------------------------------------------------------


def _matrix(rows) -> IntMatrix:
    if not rows:
        raise SchemaError("empty matrix")
    try:
        return IntMatrix.from_rows(rows)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def virtual_fibration_from_payload(p: dict) -> VirtualFibration:
    g = p["group"]
    group: FiniteAbelianGroup | int
    if "invariant_factors" in g:
        group = FiniteAbelianGroup(tuple(g["invariant_factors"]))
    else:
        group = g["order"]
    comps = []
    for c in p["components"]:
        weight = None
        if "weight" in c:
            if not isinstance(group, FiniteAbelianGroup):
                raise SchemaError("weights need a group given by invariant factors")
            if len(c["weight"]) != len(group.invariant_factors):
                raise SchemaError("weight has the wrong number of coordinates")
            weight = group.element(c["weight"])
        comps.append(FibrationComponent(c["d"], c["e"], c["r"], weight))
    return VirtualFibration(p["b"], p["f"], group, tuple(comps), p.get("etale_both_ways", False))


def monodromy_problem_from_payload(p: dict) -> MonodromyProblem:
    group = FiniteAbelianGroup(tuple(p["group"]["invariant_factors"]))
    comps = []
    for c in p["components"]:
        if "matrix" in c:
            t = _matrix(c["matrix"])
        else:
            push, lift = _matrix(c["push"]), _matrix(c["lift"])
            if push.cols != lift.rows:
                raise SchemaError(f"push {push.shape} and lift {lift.shape} cannot be composed")
            t = push @ lift
        if len(c["weight"]) != len(group.invariant_factors):
            raise SchemaError("weight has the wrong number of coordinates")
        comps.append(ComponentAction(t, group.element(c["weight"]), c.get("e", 1), c.get("r"), c.get("d", 1)))
    return MonodromyProblem(p["b"], p["f"], group, tuple(comps), p.get("etale_both_ways", False))


def generating_vector_from_payload(p: dict) -> GeneratingVector:
    grp = group_from_json(p["group"])
    sig = OrbifoldSignature(p["signature"]["q"], tuple(p["signature"]["periods"]))
    try:
        return GeneratingVector.build(sig, grp, p["alphas"], p["betas"], p["gammas"])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad group element: {exc}") from exc


# --- objects -> JSON ---------------------------------------------------------


def invariant_row_to_json(row: InvariantRow) -> dict:
    return {
        "g_B1": row.g_B1, "g_F1": row.g_F1, "g_B2": row.g_B2, "g_F2": row.g_F2,
        "c2": encode_number(row.c2), "c1_squared": encode_number(row.c1_squared),
        "sigma": encode_number(row.sigma),
        "slope": encode_number(row.slope) if row.slope is not None else None,
    }


def invariant_row_from_json(d: dict) -> tuple:
    return tuple(decode_number(d[k]) for k in ("g_B1", "g_F1", "g_B2", "g_F2", "c2", "c1_squared", "sigma", "slope"))


def report_to_json(rep: RealizationReport) -> dict:
    return {
        "obstruction": list(rep.obstruction.coords),
        "obstruction_order": rep.obstruction_order,
        "stabilizer_index": rep.stabilizer_index,
        "minimal_degree": rep.minimal_degree,
        "row": invariant_row_to_json(rep.realized),
    }


def matrix_to_json(m: IntMatrix) -> list[list[int | str]]:
    return [[encode_number(x) for x in m.row(i)] for i in range(m.rows)]
