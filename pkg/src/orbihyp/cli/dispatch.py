"""Turn a validated problem document into a :class:`Report`."""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Dict

from .. import curves, defect, jets, metric, nevanlinna, pullcurve, surfaces
from ..core import INF, Report, as_fraction, as_multiplicity, format_multiplicity
from .schemas import validate_document

DEFAULT_TOLERANCE = 1e-3


def _complex(v) -> complex:
    if isinstance(v, list):
        return complex(v[0], v[1])
    return complex(v)


def _mult(v):
    return as_multiplicity(v)


def _marks(payload):
    out = []
    for i, mark in enumerate(payload["marks"]):
        if isinstance(mark, dict):
            out.append((mark["id"], _mult(mark["m"])))
        else:
            out.append((i, _mult(mark)))
    return tuple(out)


def _curve_classify(p, opts) -> Report:
    c = curves.OrbifoldCurve(p["g"], _marks(p))
    cls = curves.classify(c, p.get("ambient_is_P1"))
    deg = curves.canonical_degree(c)
    margins = [("degree", deg)]
    details: Dict[str, Any] = {"class": str(cls)}
    if cls.reason:
        details["exclusion"] = cls.reason
    if cls.is_hyperbolic:
        margins.append(("area_over_pi", curves.hyperbolic_area(c).pi_multiple))
    if c.genus == 0:
        details["p1_entire_curve_possible"] = curves.p1_entire_curve_possible(c.multiplicities)
    if "tangency" in p:
        t = p["tangency"]
        for classical in (False, True):
            tag = "classical" if classical else "non_classical"
            induced = [curves.induced_multiplicity(t, m, classical) for m in c.multiplicities]
            details[f"induced_{tag}"] = [format_multiplicity(m) for m in induced]
            kept = [m for m in induced if m != 1]
            margins.append((f"induced_{tag}_degree", curves.canonical_degree(curves.OrbifoldCurve.from_multiplicities(0, kept))))
    return Report(
        kind="curve-classify",
        verdict=cls.is_hyperbolic,
        margins=tuple(margins),
        floats=tuple((k, float(v)) for k, v in margins) + (
            (("area", curves.hyperbolic_area(c).value),) if cls.is_hyperbolic else ()
        ),
        flags=("excluded",) if cls.reason else (),
        theorem="orbifold-curve-uniformization",
        details=details,
    )


def _model_metric(p, opts) -> Report:
    d = metric.ModelOrbifoldDisk(_mult(p["n"]))
    op = p["op"]
    tol = opts.get("tolerance", DEFAULT_TOLERANCE)
    flags = []
    verdict = True
    details: Dict[str, Any] = {"op": op}

    def need(*names):
        missing = [k for k in names if k not in p]
        if missing:
            raise ValueError(f"op {op!r} needs {', '.join(missing)}")

    if op == "density":
        need("z")
        val = metric.density(d, _complex(p["z"]))
        if val is metric.CONE_POINT:
            flags.append("cone-point")
        floats = [("density", float(val))]
        theorem = "model-orbifold-disk-metric"
    elif op == "distance":
        need("p", "q")
        floats = [("distance", metric.distance(d, _complex(p["p"]), _complex(p["q"])))]
        theorem = "model-orbifold-disk-metric"
    elif op == "oracle":
        need("p", "q")
        a, b = _complex(p["p"]), _complex(p["q"])
        closed = metric.distance(d, a, b)
        oracle = metric.geodesic_oracle_distance(d, a, b, p.get("resolution", 512))
        floats = [("distance", closed), ("oracle", oracle), ("difference", oracle - closed)]
        verdict = abs(oracle - closed) <= tol
        details["tolerance"] = tol
        theorem = "model-orbifold-disk-metric"
    else:
        need("m", "t")
        ratio = metric.ahlfors_schwarz_ratio(d, p["m"], _complex(p["t"]))
        floats = [("ratio", ratio)]
        verdict = ratio <= 1 + 1e-12
        theorem = "ahlfors-schwarz-lemma"
    return Report("model-metric", verdict, (), tuple(floats), tuple(flags), theorem, details)


def _intersection(p) -> pullcurve.IntersectionData:
    return pullcurve.IntersectionData(
        genus=p["genus"],
        curve_degree=p["curve_degree"],
        ambient_dim=p["ambient_dim"],
        components=tuple((c["d"], _mult(c["m"])) for c in p["components"]),
        contacts=tuple(tuple(row) for row in p["contacts"]),
    )


def _pullback(p, opts) -> Report:
    data = _intersection(p)
    per = p.get("per_component", False)
    ms = pullcurve.minimal_structure(data, per)
    deg = pullcurve.source_degree(data, per)
    return Report(
        kind="pullback-structure",
        verdict=deg > 0,
        margins=(("source_degree", deg),),
        floats=(("source_degree", float(deg)),),
        flags=("per-component",) if per else (),
        theorem="minimal-orbifold-structure",
        details={"minimal_structure": [format_multiplicity(m) for m in ms]},
    )


def _alg_hyp(p, opts) -> Report:
    data = _intersection(p)
    per = p.get("per_component", False)
    chain = pullcurve.inequality_chain(data, per)
    margins = (
        ("gap", chain.gap),
        ("log_gap", chain.log_gap),
        ("degree_excess", data.divisor_degree() - 2 * data.ambient_dim),
        ("weights_sum", chain.weights_sum),
        ("contact_bound", chain.contact_bound),
    )
    return Report(
        kind="alg-hyp",
        verdict=chain.gap >= 0,
        margins=margins,
        floats=tuple((k, float(v)) for k, v in margins),
        flags=("very-generic-assumed",) + (("per-component",) if per else ()),
        theorem="orbifold-algebraic-hyperbolicity-bound",
        details={"inequality_chain_holds": chain.holds()},
    )


def _nochka(p, opts) -> Report:
    ms = tuple(_mult(m) for m in p["m"])
    a = defect.ArrangementSpec(p["n"], p.get("q", len(ms)), ms)
    exhaustive = opts.get("exhaustive", False)
    if p.get("mode", "embedding" if exhaustive else "degeneracy") == "embedding":
        return defect.embedding_check(a, exhaustive)
    rep = defect.degeneracy_check(a)
    details = dict(rep.details)
    details["conclusion"] = "entire curves are constant" if rep.verdict else "inconclusive"
    return Report(rep.kind, rep.verdict, rep.margins, rep.floats, rep.flags, rep.theorem, details)


def _surface(p, opts) -> Report:
    if "degrees" in p:
        return surfaces.arrangement_report(p["degrees"], [_mult(m) for m in p["m"]])
    comps = tuple(
        surfaces.Component(c["genus"], _mult(c["m"]), c["cross"], c.get("h0_nonzero", True))
        for c in p["components"]
    )
    return surfaces.surface_report(surfaces.SurfacePairData(as_fraction(p["logc1sq"]), as_fraction(p["logc2"]), comps))


def _plane_pair(p, opts) -> Report:
    (d1, d2), (m1, m2) = p["d"], p["m"]
    return surfaces.plane_pair_criterion(d1, d2, _mult(m1), _mult(m2))


def _bt(p, opts) -> Report:
    value = surfaces.bt_criterion(as_fraction(p["c1sq"]), as_fraction(p["c2"]), p["g"], p["m"])
    return Report(
        kind="bt-criterion",
        verdict=value > 0,
        margins=(("criterion", value),),
        floats=(("criterion", float(value)),),
        theorem="bogomolov-tschinkel-fibration",
    )


def _jets(p, opts) -> Report:
    chart = jets.LocalOrbifoldChart(tuple(_mult(m) for m in p["m"]))
    details: Dict[str, Any] = {}
    margins = []
    if "blocks" in p:
        exps = jets.snq_exponents(chart, p["blocks"])
        details["snq_exponents"] = exps
    if "N" in p:
        k = p.get("k", 1)
        gens = jets.jet_generators(chart, k, p["N"])
        margins.append(("count", Fraction(len(gens))))
        details["all_exponents_zero"] = all(not any(g.exponents) for g in gens)
        if p.get("list", False):
            details["generators"] = [{"alpha": [list(r) for r in g.alpha], "exponents": list(g.exponents)} for g in gens]
    if not details:
        raise ValueError("jets-enumerate needs N or blocks")
    return Report(
        kind="jets-enumerate",
        verdict=True,
        margins=tuple(margins),
        floats=tuple((k, float(v)) for k, v in margins),
        theorem="orbifold-jet-differentials",
        details=details,
    )


def _nevanlinna(p, opts) -> Report:
    f = nevanlinna.PolynomialCurve(tuple([_complex(c) for c in poly] for poly in p["coordinates"]))
    H = [_complex(a) for a in p["H"]]
    l = _mult(p.get("l", 1))
    tol = opts.get("tolerance", DEFAULT_TOLERANCE)
    est = nevanlinna.defect_estimate(f, H, l, p.get("r_max", 1e3), p.get("points", 12), p.get("norm", "max"))
    E = nevanlinna.pullback_divisor(f, H)
    # ramification forces delta^l >= 1 - l / (smallest preimage multiplicity)
    nu = min((m for _, m in E.zeros), default=None)
    if nu is None:
        bound = 1.0
    elif l == INF:
        bound = 0.0
    else:
        bound = max(0.0, 1 - l / nu)
    return Report(
        kind="nevanlinna-run",
        verdict=est.value >= bound - tol,
        floats=(("defect", est.value), ("order", est.order), ("counting", est.counting), ("ramification_bound", bound)),
        flags=("finite-radius-proxy",),
        theorem="truncated-defect-ramification-bound",
        details={
            "radii": list(est.radii),
            "trajectory": list(est.trajectory),
            "zeros": [{"z": [z.real, z.imag], "multiplicity": m} for z, m in E.zeros],
            "tolerance": tol,
        },
    )


HANDLERS: Dict[str, Callable[[dict, dict], Report]] = {
    "curve-classify": _curve_classify,
    "model-metric": _model_metric,
    "pullback-structure": _pullback,
    "alg-hyp": _alg_hyp,
    "nochka": _nochka,
    "surface-criterion": _surface,
    "plane-pair": _plane_pair,
    "bt-criterion": _bt,
    "jets-enumerate": _jets,
    "nevanlinna-run": _nevanlinna,
}


def run(doc: dict) -> Report:
    """Validate and evaluate one problem document.

    Raises :class:`~orbihyp.cli.schemas.SchemaError` for malformed input;
    ValueError/TypeError from the library propagate as domain errors.
    """
    validate_document(doc)
    return HANDLERS[doc["kind"]](doc["payload"], doc.get("options", {}))
