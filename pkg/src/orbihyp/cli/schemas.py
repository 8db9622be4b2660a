"""JSON schemas for problem documents, one per kind."""
from __future__ import annotations

from typing import Any, Dict

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

MULT = {"oneOf": [{"type": "integer", "minimum": 1}, {"const": "inf"}]}
MULTS = {"type": "array", "items": MULT}
RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*-?\d+\s*(/\s*\d+\s*)?$"},
        {
            "type": "object",
            "properties": {"num": {"type": "integer"}, "den": {"type": "integer", "minimum": 1}},
            "required": ["num", "den"],
            "additionalProperties": False,
        },
    ]
}
COMPLEX = {
    "oneOf": [
        {"type": "number"},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    ]
}
NAT = {"type": "integer", "minimum": 0}
POS = {"type": "integer", "minimum": 1}


def _obj(props: Dict[str, Any], required=()) -> Dict[str, Any]:
    return {"type": "object", "properties": props, "required": list(required), "additionalProperties": False}


_INTERSECTION = _obj(
    {
        "genus": NAT,
        "curve_degree": POS,
        "ambient_dim": POS,
        "components": {
            "type": "array",
            "minItems": 1,
            "items": _obj({"d": POS, "m": MULT}, ["d", "m"]),
        },
        "contacts": {"type": "array", "minItems": 1, "items": {"type": "array", "items": NAT}},
        "per_component": {"type": "boolean"},
    },
    ["genus", "curve_degree", "ambient_dim", "components", "contacts"],
)

PAYLOADS: Dict[str, Dict[str, Any]] = {
    "curve-classify": _obj(
        {
            "g": NAT,
            "marks": {"type": "array", "items": {"oneOf": [MULT, _obj({"id": {"type": ["string", "integer"]}, "m": MULT}, ["id", "m"])]}},
            "ambient_is_P1": {"type": "boolean"},
            "tangency": POS,
        },
        ["g", "marks"],
    ),
    "model-metric": _obj(
        {
            "n": MULT,
            "op": {"enum": ["density", "distance", "oracle", "ratio"]},
            "z": COMPLEX,
            "p": COMPLEX,
            "q": COMPLEX,
            "m": POS,
            "t": COMPLEX,
            "resolution": {"type": "integer", "minimum": 64},
        },
        ["n", "op"],
    ),
    "pullback-structure": _INTERSECTION,
    "alg-hyp": _INTERSECTION,
    "nochka": _obj(
        {
            "n": POS,
            "q": POS,
            "m": {**MULTS, "minItems": 1},
            "mode": {"enum": ["degeneracy", "embedding"]},
        },
        ["n", "m"],
    ),
    "surface-criterion": {
        "oneOf": [
            _obj(
                {
                    "logc1sq": RATIONAL,
                    "logc2": RATIONAL,
                    "components": {
                        "type": "array",
                        "items": _obj(
                            {"genus": NAT, "m": MULT, "cross": NAT, "h0_nonzero": {"type": "boolean"}},
                            ["genus", "m", "cross"],
                        ),
                    },
                },
                ["logc1sq", "logc2", "components"],
            ),
            _obj({"degrees": {"type": "array", "items": POS}, "m": MULTS}, ["degrees", "m"]),
        ]
    },
    "plane-pair": _obj(
        {
            "d": {"type": "array", "items": POS, "minItems": 2, "maxItems": 2},
            "m": {**MULTS, "minItems": 2, "maxItems": 2},
        },
        ["d", "m"],
    ),
    "bt-criterion": _obj({"c1sq": RATIONAL, "c2": RATIONAL, "g": NAT, "m": {"type": "integer", "minimum": 2}}, ["c1sq", "c2", "g", "m"]),
    "jets-enumerate": _obj(
        {
            "m": {**MULTS, "minItems": 1},
            "N": POS,
            "k": POS,
            "blocks": {"type": "array", "minItems": 1, "items": {"type": "array", "items": POS, "minItems": 1}},
            "list": {"type": "boolean"},
        },
        ["m"],
    ),
    "nevanlinna-run": _obj(
        {
            "coordinates": {"type": "array", "minItems": 2, "items": {"type": "array", "minItems": 1, "items": COMPLEX}},
            "H": {"type": "array", "minItems": 2, "items": COMPLEX},
            "l": MULT,
            "r_max": {"type": "number", "exclusiveMinimum": 1},
            "points": POS,
            "norm": {"enum": ["max", "fubini-study"]},
        },
        ["coordinates", "H"],
    ),
}

KINDS = tuple(PAYLOADS)

OPTIONS = _obj(
    {
        "tolerance": {"type": "number", "exclusiveMinimum": 0},
        "exhaustive": {"type": "boolean"},
        "format": {"enum": ["json", "text"]},
    }
)

DOCUMENT = _obj(
    {"kind": {"enum": list(KINDS)}, "payload": {"type": "object"}, "options": OPTIONS},
    ["kind", "payload"],
)


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _check(schema, instance, prefix: str) -> None:
    err = best_match(Draft202012Validator(schema).iter_errors(instance))
    if err is not None:
        path = "/".join(str(p) for p in err.absolute_path)
        raise SchemaError(f"{prefix}/{path}" if path else prefix or "/", err.message)


def validate_document(doc) -> None:
    _check(DOCUMENT, doc, "")
    _check(PAYLOADS[doc["kind"]], doc["payload"], "/payload")
