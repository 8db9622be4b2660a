"""General-type criteria for orbifold surfaces coming from orbifold
symmetric differentials, specialised to plane-curve arrangements."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .core import (
    Multiplicity,
    Report,
    as_fraction,
    as_multiplicity,
    format_multiplicity,
    is_infinite,
    reciprocal,
    weight,
)


@dataclass(frozen=True)
class Component:
    genus: int
    multiplicity: Multiplicity
    cross_intersections: int  # sum_{j != i} C_i . C_j
    self_sections_nonzero: bool = True  # h^0(C_i, O(C_i)) != 0

    def __post_init__(self):
        if self.genus < 0 or self.cross_intersections < 0:
            raise ValueError("genus and intersection numbers are nonnegative")
        object.__setattr__(self, "multiplicity", as_multiplicity(self.multiplicity))


@dataclass(frozen=True)
class SurfacePairData:
    logc1sq: Fraction
    logc2: Fraction
    components: Tuple[Component, ...]

    def __post_init__(self):
        object.__setattr__(self, "logc1sq", as_fraction(self.logc1sq))
        object.__setattr__(self, "logc2", as_fraction(self.logc2))
        object.__setattr__(self, "components", tuple(self.components))

    def applicability_flags(self) -> Tuple[str, ...]:
        flags = []
        if any(c.genus < 2 for c in self.components):
            flags.append("component-genus-below-2")
        if not all(c.self_sections_nonzero for c in self.components):
            flags.append("h0-normal-bundle-zero")
        flags.append("general-type-assumed")
        return tuple(flags)


@dataclass(frozen=True)
class PlaneArrangement:
    degrees: Tuple[int, ...]
    multiplicities: Tuple[Multiplicity, ...]
    normal_crossings: bool = True

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        ms = tuple(as_multiplicity(m) for m in self.multiplicities)
        if len(degrees) != len(ms):
            raise ValueError("degrees and multiplicities must have the same length")
        if any(d < 1 for d in degrees):
            raise ValueError("curve degrees must be positive")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "multiplicities", ms)

    def divisor_degree(self) -> Fraction:
        return sum((weight(m) * d for d, m in zip(self.degrees, self.multiplicities)), Fraction(0))


def plane_curve_genus(d: int) -> int:
    return (d - 1) * (d - 2) // 2


def log_chern_plane(p: PlaneArrangement) -> Tuple[Fraction, Fraction]:
    """Log Chern numbers (c1^2, c2) of (P^2, C_1 + ... + C_k) for smooth
    curves meeting transversally.

    c1^2 = (d - 3)^2 with d the total degree, and c2 = e(P^2) - e(C) with
    e(C) = sum(3 d_i - d_i^2) - sum_{i<j} d_i d_j.
    """
    ds = p.degrees
    d = sum(ds)
    c1sq = (d - 3) ** 2
    cross = sum(ds[i] * ds[j] for i in range(len(ds)) for j in range(i + 1, len(ds)))
    c2 = 3 - sum(3 * di - di * di for di in ds) + cross
    return Fraction(c1sq), Fraction(c2)


def lift_plane(p: PlaneArrangement) -> SurfacePairData:
    c1sq, c2 = log_chern_plane(p)
    total = sum(p.degrees)
    comps = tuple(
        Component(
            genus=plane_curve_genus(d),
            multiplicity=m,
            cross_intersections=d * (total - d),
            self_sections_nonzero=True,
        )
        for d, m in zip(p.degrees, p.multiplicities)
    )
    return SurfacePairData(c1sq, c2, comps)


def jet_criterion(s: SurfacePairData) -> Fraction:
    """c1^2 - c2 - sum_i (1/m_i)(2 g_i - 2 + sum_{j != i} C_i C_j).

    Positive values give nonzero sections of S^N Omega_(X/Delta) (x) A^-1
    for large N; the hypotheses (g_i >= 2, h^0(O(C_i)) != 0, general type)
    are reported by :meth:`SurfacePairData.applicability_flags`, not enforced.
    """
    penalty = sum(
        (reciprocal(c.multiplicity) * (2 * c.genus - 2 + c.cross_intersections) for c in s.components),
        Fraction(0),
    )
    return s.logc1sq - s.logc2 - penalty


def h0_leading_coefficient(s: SurfacePairData) -> Fraction:
    """Coefficient of q^3 in the lower bound for h^0(S^N Omega_(X/Delta)),
    N = q * prod(m_i): (prod m_i)^3 / 6 times the jet criterion."""
    prod = 1
    for c in s.components:
        if is_infinite(c.multiplicity):
            raise ValueError("leading coefficient needs finite multiplicities")
        prod *= c.multiplicity
    return Fraction(prod**3, 6) * jet_criterion(s)


def plane_pair_threshold(d1: int, d2: int) -> Fraction:
    d = d1 + d2
    if d == 3:
        raise ValueError("total degree 3 makes the threshold undefined")
    return Fraction(d1 * d1 + d2 * d2 + d1 * d2 - 6, d - 3)


def plane_pair_criterion(d1: int, d2: int, m1: Multiplicity, m2: Multiplicity) -> Report:
    """Degeneracy test for two smooth plane curves of degrees d1, d2.

    Passes when deg Delta > (d1^2 + d2^2 + d1 d2 - 6)/(d1 + d2 - 3).  The
    jet criterion of the lifted surface data equals (d - 3) times the margin.
    """
    arr = PlaneArrangement((d1, d2), (m1, m2))
    threshold = plane_pair_threshold(d1, d2)
    deg = arr.divisor_degree()
    margin = deg - threshold
    jet = jet_criterion(lift_plane(arr))
    flags = []
    if min(d1, d2) < 4:
        flags.append("degree-below-4")
    general_type = deg > 3
    if not general_type:
        flags.append("not-general-type")
    return Report(
        kind="plane-pair",
        verdict=margin > 0,
        margins=(
            ("margin", margin),
            ("deg_delta", deg),
            ("threshold", threshold),
            ("jet_criterion", jet),
            ("general_type_margin", deg - 3),
        ),
        floats=(("margin", float(margin)), ("deg_delta", float(deg)), ("threshold", float(threshold))),
        flags=tuple(flags),
        theorem="plane-curve-pair-jet-criterion",
        details={
            "degrees": [d1, d2],
            "multiplicities": [format_multiplicity(arr.multiplicities[0]), format_multiplicity(arr.multiplicities[1])],
            "general_type": general_type,
        },
    )


def bt_criterion(logc1sq_B, logc2_B, gD: int, m: int) -> Fraction:
    """c1^2(B,D) - c2(B,D) - (2 g(D) - 2)/m for an elliptic fibration with
    multiple fibres of multiplicity m over the smooth curve D."""
    if m < 2:
        raise ValueError("multiple fibres have multiplicity >= 2")
    if gD < 0:
        raise ValueError("genus must be nonnegative")
    return as_fraction(logc1sq_B) - as_fraction(logc2_B) - Fraction(2 * gD - 2, m)


def surface_report(s: SurfacePairData) -> Report:
    value = jet_criterion(s)
    margins = [("jet_criterion", value)]
    if all(not is_infinite(c.multiplicity) for c in s.components):
        margins.append(("h0_leading_coefficient", h0_leading_coefficient(s)))
    return Report(
        kind="surface-criterion",
        verdict=value > 0,
        margins=tuple(margins),
        floats=(("jet_criterion", float(value)),),
        flags=s.applicability_flags(),
        theorem="orbifold-surface-symmetric-differentials",
    )


def arrangement_report(degrees: Sequence[int], ms: Sequence) -> Report:
    return surface_report(lift_plane(PlaneArrangement(tuple(degrees), tuple(ms))))
