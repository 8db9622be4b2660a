"""Minimal orbifold structures on curves in projective space and the
degree bound for algebraic hyperbolicity of (P^n / Delta)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .core import (
    INF,
    Multiplicity,
    as_multiplicity,
    ceil_ratio,
    reciprocal,
    weight,
)
from .curves import OrbifoldCurve, canonical_degree


@dataclass(frozen=True)
class IntersectionData:
    """Contact record of a curve C against hypersurfaces H_1..H_q.

    ``contacts[i][j]`` is the order t_{i,j} of f^*H_j at the i-th point of
    f^{-1}(D) on the normalization.  Column sums must equal
    ``curve_degree * d_j`` (Bezout).
    """

    genus: int
    curve_degree: int
    ambient_dim: int
    components: Tuple[Tuple[int, Multiplicity], ...]
    contacts: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.curve_degree < 1 or self.ambient_dim < 1:
            raise ValueError("curve degree and ambient dimension must be positive")
        comps = tuple((int(d), as_multiplicity(m)) for d, m in self.components)
        if any(d < 1 for d, _ in comps):
            raise ValueError("hypersurface degrees must be positive")
        rows = tuple(tuple(int(t) for t in row) for row in self.contacts)
        q = len(comps)
        for i, row in enumerate(rows):
            if len(row) != q:
                raise ValueError(f"contact row {i} has {len(row)} entries, expected {q}")
            if any(t < 0 for t in row):
                raise ValueError(f"contact row {i} has a negative entry")
            if not any(row):
                raise ValueError(f"point {i} does not lie on the divisor")
        for j, (d, _) in enumerate(comps):
            total = sum(row[j] for row in rows)
            if total != self.curve_degree * d:
                raise ValueError(
                    f"column {j}: contacts sum to {total}, Bezout requires "
                    f"{self.curve_degree} * {d} = {self.curve_degree * d}"
                )
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "contacts", rows)

    @property
    def n_points(self) -> int:
        return len(self.contacts)

    def row_total(self, i: int) -> int:
        return sum(self.contacts[i])

    def divisor_degree(self) -> Fraction:
        return sum((weight(m) * d for d, m in self.components), Fraction(0))


def minimal_structure(data: IntersectionData, per_component: bool = False) -> List[Multiplicity]:
    """Smallest multiplicity at each point of f^{-1}(D) making f an
    orbifold morphism.

    By default the contact order used is the row total t_i = sum_j t_{i,j};
    with ``per_component`` each hypersurface is checked against its own
    t_{i,j}, which is the sharper (larger) requirement.
    """
    result = []
    for i, row in enumerate(data.contacts):
        t_total = data.row_total(i)
        best: Multiplicity = 1
        for (_, m), t in zip(data.components, row):
            if t == 0:
                continue
            best = max(best, ceil_ratio(m, t if per_component else t_total))
        result.append(best)
    return result


def source_curve(data: IntersectionData, per_component: bool = False) -> OrbifoldCurve:
    """The normalization with its minimal orbifold structure (points
    with multiplicity 1 dropped)."""
    ms = minimal_structure(data, per_component)
    return OrbifoldCurve(data.genus, tuple((i, m) for i, m in enumerate(ms) if m != 1))


def source_degree(data: IntersectionData, per_component: bool = False) -> Fraction:
    ms = minimal_structure(data, per_component)
    return 2 * data.genus - 2 + sum((weight(m) for m in ms), Fraction(0))


def algebraic_hyperbolicity_gap(data: IntersectionData, per_component: bool = False) -> Fraction:
    """deg K_(C/Delta') - (deg Delta - 2n) deg C for the minimal structure.

    Non-negative whenever the arrangement is generic enough for the
    logarithmic bound to hold; the value is returned as is.
    """
    bound = (data.divisor_degree() - 2 * data.ambient_dim) * data.curve_degree
    return source_degree(data, per_component) - bound


def logarithmic_gap(data: IntersectionData) -> Fraction:
    """Slack in 2g - 2 + i(C,D) >= (d - 2n) deg C."""
    d = sum(deg for deg, _ in data.components)
    return Fraction(2 * data.genus - 2 + data.n_points - (d - 2 * data.ambient_dim) * data.curve_degree)


@dataclass(frozen=True)
class InequalityChain:
    """Both sides of every step of the chain bounding sum(1 - 1/m~_i)."""

    weights_sum: Fraction        # sum_i (1 - 1/m~_i)
    sup_bound: Fraction          # sum_i (1 - t_i / sup_{j in phi(i)} m_j)
    contact_bound: Fraction      # i(C,D) - sum_i sum_j t_ij / m_j
    contact_sum: Fraction        # sum_i sum_j t_ij / m_j
    bezout_sum: Fraction         # deg C * sum_j d_j / m_j
    gap: Fraction
    log_gap: Fraction

    def holds(self) -> bool:
        return (
            self.weights_sum >= self.sup_bound >= self.contact_bound
            and self.contact_sum == self.bezout_sum
            and self.gap >= self.log_gap
        )


def inequality_chain(data: IntersectionData, per_component: bool = False) -> InequalityChain:
    ms = minimal_structure(data, per_component)
    weights_sum = sum((weight(m) for m in ms), Fraction(0))
    sup_bound = Fraction(0)
    for i, row in enumerate(data.contacts):
        sup_m = max(m for (_, m), t in zip(data.components, row) if t > 0)
        sup_bound += 1 - data.row_total(i) * reciprocal(sup_m)
    contact_sum = sum(
        (t * reciprocal(m) for row in data.contacts for (_, m), t in zip(data.components, row)),
        Fraction(0),
    )
    bezout_sum = data.curve_degree * sum((d * reciprocal(m) for d, m in data.components), Fraction(0))
    return InequalityChain(
        weights_sum=weights_sum,
        sup_bound=sup_bound,
        contact_bound=data.n_points - contact_sum,
        contact_sum=contact_sum,
        bezout_sum=bezout_sum,
        gap=algebraic_hyperbolicity_gap(data, per_component),
        log_gap=logarithmic_gap(data),
    )


def is_orbifold_morphism(data: IntersectionData, ms: Sequence[Multiplicity], per_component: bool = False) -> bool:
    """Check m'_i * t >= m_j wherever the point meets H_j."""
    for i, (row, mi) in enumerate(zip(data.contacts, ms)):
        mi = as_multiplicity(mi)
        t_total = data.row_total(i)
        for (_, m), t in zip(data.components, row):
            if t == 0:
                continue
            order = t if per_component else t_total
            if m == INF:
                if mi != INF:
                    return False
            elif mi != INF and mi * order < m:
                return False
    return True


def p1_curve_degeneracy_check(curve: OrbifoldCurve) -> bool:
    """True when the image orbifold curve is hyperbolic, so any orbifold
    entire curve landing in it must be constant."""
    return canonical_degree(curve) > 0
