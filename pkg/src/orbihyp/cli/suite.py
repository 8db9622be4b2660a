"""Golden reproduction of the worked examples.

Each case is an ordinary problem document; its report is compared with a
stored golden record (verdict, exact margins, floats, selected details).
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..core import Report
from .dispatch import run
from .output import encode

INF = "inf"
FLOAT_RTOL = 1e-9
DETAIL_KEYS = (
    "class",
    "exclusion",
    "induced_classical",
    "induced_non_classical",
    "conclusion",
    "minimal_structure",
    "snq_exponents",
    "all_exponents_zero",
    "p1_entire_curve_possible",
    "failing_subsets",
)


def _doc(kind, payload, **options):
    doc = {"kind": kind, "payload": payload}
    if options:
        doc["options"] = options
    return doc


def _cases() -> List[Tuple[str, dict]]:
    cases = [
        ("plane-pair/5-5-70-71", _doc("plane-pair", {"d": [5, 5], "m": [70, 71]})),
        ("plane-pair/5-5-70-70", _doc("plane-pair", {"d": [5, 5], "m": [70, 70]})),
        ("plane-pair/5-5-inf-inf", _doc("plane-pair", {"d": [5, 5], "m": [INF, INF]})),
        ("surface/quintics-70-71", _doc("surface-criterion", {"degrees": [5, 5], "m": [70, 71]})),
        ("surface/quintics-70-70", _doc("surface-criterion", {"degrees": [5, 5], "m": [70, 70]})),
        ("curve/2-2-3", _doc("curve-classify", {"g": 0, "marks": [2, 2, 3]})),
        ("curve/3-3-5-tangency-2", _doc("curve-classify", {"g": 0, "marks": [3, 3, 5], "tangency": 2})),
        ("curve/2-3-7", _doc("curve-classify", {"g": 0, "marks": [2, 3, 7]})),
        ("curve/2-3-6", _doc("curve-classify", {"g": 0, "marks": [2, 3, 6]})),
        ("curve/teardrop-5", _doc("curve-classify", {"g": 0, "marks": [5], "ambient_is_P1": True})),
        ("curve/spindle-2-3", _doc("curve-classify", {"g": 0, "marks": [2, 3], "ambient_is_P1": True})),
        ("curve/genus-2", _doc("curve-classify", {"g": 2, "marks": []})),
        ("curve/torus", _doc("curve-classify", {"g": 1, "marks": []})),
        ("curve/inf-inf", _doc("curve-classify", {"g": 0, "marks": [INF, INF]})),
    ]
    for n in range(2, 7):
        q = 2 * n + 1
        cases.append((f"nochka/classical-n{n}-q{q}", _doc("nochka", {"n": n, "m": [INF] * q})))
    cases += [
        ("nochka/n2-q5-m6", _doc("nochka", {"n": 2, "m": [6] * 5})),
        ("nochka/n2-q5-m5", _doc("nochka", {"n": 2, "m": [5] * 5})),
        ("embedding/n2-q5-inf", _doc("nochka", {"n": 2, "m": [INF] * 5}, exhaustive=True)),
        ("embedding/n2-q4", _doc("nochka", {"n": 2, "m": [INF] * 4, "mode": "embedding"})),
        ("bt/boundary", _doc("bt-criterion", {"c1sq": 1, "c2": 0, "g": 2, "m": 2})),
        ("bt/positive", _doc("bt-criterion", {"c1sq": 5, "c2": 0, "g": 3, "m": 4})),
        ("pullback/t2-m5", _doc("pullback-structure", {
            "genus": 0, "curve_degree": 1, "ambient_dim": 2,
            "components": [{"d": 2, "m": 5}], "contacts": [[2]],
        })),
        ("pullback/per-component-4-6", _doc("pullback-structure", {
            "genus": 0, "curve_degree": 1, "ambient_dim": 2,
            "components": [{"d": 2, "m": 4}, {"d": 3, "m": 6}], "contacts": [[2, 3]],
            "per_component": True,
        })),
        ("metric/density-n1", _doc("model-metric", {"n": 1, "op": "density", "z": 0.5})),
        ("metric/density-ninf", _doc("model-metric", {"n": INF, "op": "density", "z": math.exp(-1)})),
        ("metric/density-n2", _doc("model-metric", {"n": 2, "op": "density", "z": 0.25})),
        ("metric/distance-n2", _doc("model-metric", {"n": 2, "op": "distance", "p": 0, "q": 0.25})),
        ("jets/sym-n1-m2-N3", _doc("jets-enumerate", {"m": [2], "N": 3, "list": True})),
        ("jets/k2-N2-m2", _doc("jets-enumerate", {"m": [2], "k": 2, "N": 2, "list": True})),
        ("jets/k3-N3-inf", _doc("jets-enumerate", {"m": [INF], "k": 3, "N": 3})),
        ("jets/snq-2-1", _doc("jets-enumerate", {"m": [2, 3], "blocks": [[1], [1]]})),
    ]
    for m in (2, 3, 5):
        cases.append((f"nevanlinna/monomial-{m}", _doc("nevanlinna-run", {
            "coordinates": [[1], [0] * m + [1]], "H": [0, 1], "l": 1, "r_max": 1000,
        })))
    return cases


CASES = _cases()


def golden_record(rep: Report) -> dict:
    rec = {
        "verdict": rep.verdict,
        "margins": {name: str(v) for name, v in rep.margins},
        "floats": {name: v for name, v in rep.floats if math.isfinite(v)},
    }
    details = {k: encode(rep.details[k]) for k in DETAIL_KEYS if k in rep.details}
    if details:
        rec["details"] = details
    return rec


def diff_record(expected: dict, rep: Report) -> List[str]:
    """Human-readable mismatches between a golden record and a report."""
    out = []
    if expected.get("verdict") != rep.verdict:
        out.append(f"verdict: expected {expected.get('verdict')}, got {rep.verdict}")
    margins = dict(rep.margins)
    for name, value in expected.get("margins", {}).items():
        if name not in margins:
            out.append(f"margin {name}: missing")
        elif Fraction(value) != margins[name]:
            out.append(f"margin {name}: expected {value}, got {margins[name]}")
    floats = dict(rep.floats)
    for name, value in expected.get("floats", {}).items():
        got = floats.get(name)
        if got is None:
            out.append(f"float {name}: missing")
        elif not math.isclose(got, value, rel_tol=FLOAT_RTOL, abs_tol=FLOAT_RTOL):
            out.append(f"float {name}: expected {value!r}, got {got!r}")
    for key, value in expected.get("details", {}).items():
        got = encode(rep.details.get(key))
        if got != value:
            out.append(f"detail {key}: expected {value!r}, got {got!r}")
    return out


def default_golden() -> Path:
    return Path(str(resources.files("orbihyp.cli").joinpath("golden.json")))


def load_golden(path: Optional[Path] = None) -> Dict[str, dict]:
    """Raises FileNotFoundError when the golden file is absent."""
    path = Path(path) if path else default_golden()
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)["cases"]


def run_suite(golden: Dict[str, dict]) -> List[dict]:
    results = []
    for name, doc in CASES:
        rep = run(doc)
        if name not in golden:
            problems = ["no golden record"]
        else:
            problems = diff_record(golden[name], rep)
        results.append({"name": name, "ok": not problems, "mismatches": problems, "report": rep})
    return results


def write_golden(path: Path) -> None:
    cases = {name: golden_record(run(doc)) for name, doc in CASES}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"version": 1, "cases": cases}, fh, indent=2, sort_keys=True)
        fh.write("\n")
