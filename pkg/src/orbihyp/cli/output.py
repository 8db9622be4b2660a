"""Deterministic JSON and plain-text renderings of reports.

Rationals go out as {num, den} pairs built straight from the Fraction, and
floats are written with 17 significant digits so that identical documents
give byte-identical output.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, List

import numpy as np

from ..core import Report

_FLOAT_TAG = "\x00f:"


def _float_token(x: float) -> Any:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    # placeholder string, swapped for a bare number after json.dumps
    text = format(x, ".17g")
    if not any(c in text for c in ".en"):
        text += ".0"
    return _FLOAT_TAG + text


def encode(obj: Any) -> Any:
    """Recursively convert report contents into JSON-safe values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (float, np.floating)):
        return _float_token(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return [_float_token(obj.real), _float_token(obj.imag)]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [encode(v) for v in obj]
    return str(obj)


def report_dict(rep: Report) -> dict:
    return {
        "kind": rep.kind,
        "verdict": rep.verdict,
        "margins": [{"name": name, **encode(value)} for name, value in rep.margins],
        "floats": {name: encode(value) for name, value in rep.floats},
        "flags": list(rep.flags),
        "theorem": rep.theorem,
        "details": encode(rep.details),
    }


def dumps(obj: Any) -> str:
    return _unquote(json.dumps(encode(obj), sort_keys=True, indent=2, ensure_ascii=False))


def _unquote(text: str) -> str:
    """Replace each tagged float string "\\u0000f:1.5" by the bare 1.5."""
    out: List[str] = []
    tag = '"\\u0000f:'
    i = 0
    while True:
        j = text.find(tag, i)
        if j < 0:
            out.append(text[i:])
            return "".join(out)
        k = text.index('"', j + len(tag))
        out.append(text[i:j])
        out.append(text[j + len(tag):k])
        i = k + 1


def render_json(rep: Report) -> str:
    return dumps(report_dict(rep))


def _fmt_fraction(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def render_text(rep: Report) -> str:
    lines = [f"{rep.kind}: {'PASS' if rep.verdict else 'FAIL'}  [{rep.theorem}]"]
    for name, value in rep.margins:
        lines.append(f"  {name:<28} {_fmt_fraction(value):>16}  ({float(value):.6g})")
    for name, value in rep.floats:
        if name not in dict(rep.margins):
            lines.append(f"  {name:<28} {value:.12g}")
    if rep.flags:
        lines.append("  flags: " + ", ".join(rep.flags))
    for key, value in rep.details.items():
        if isinstance(value, (list, tuple)) and len(value) > 8:
            value = f"[{len(value)} entries]"
        lines.append(f"  {key}: {value}")
    return "\n".join(lines)
