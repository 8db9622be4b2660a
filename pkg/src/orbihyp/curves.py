"""Compact orbifold curves (M / sum (1 - 1/nu_i) x_i)."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Optional, Sequence, Tuple

from .core import (
    INF,
    Multiplicity,
    as_multiplicity,
    ceil_ratio,
    is_infinite,
    sum_weights,
)


@dataclass(frozen=True)
class OrbifoldCurve:
    genus: int
    marks: Tuple[Tuple[Hashable, Multiplicity], ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        marks = tuple((pid, as_multiplicity(m)) for pid, m in self.marks)
        ids = [pid for pid, _ in marks]
        if len(set(ids)) != len(ids):
            raise ValueError("marked points must be distinct")
        if any(m == 1 for _, m in marks):
            raise ValueError("marks of multiplicity 1 carry no orbifold structure")
        object.__setattr__(self, "marks", marks)

    @classmethod
    def from_multiplicities(cls, genus: int, ms: Sequence) -> "OrbifoldCurve":
        """Build a curve whose marks are labelled 0, 1, 2, ..."""
        return cls(genus, tuple(enumerate(ms)))

    @property
    def multiplicities(self) -> Tuple[Multiplicity, ...]:
        return tuple(m for _, m in self.marks)


class Geometry(enum.Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"
    EXCLUDED = "excluded"


@dataclass(frozen=True)
class UniformizationClass:
    geometry: Geometry
    reason: Optional[str] = None  # "i" or "ii" when excluded

    @property
    def is_hyperbolic(self) -> bool:
        return self.geometry is Geometry.HYPERBOLIC

    def __str__(self):
        if self.geometry is Geometry.EXCLUDED:
            return f"excluded({self.reason})"
        return self.geometry.value


def canonical_degree(c: OrbifoldCurve) -> Fraction:
    """deg(K_M + Delta) = 2g - 2 + sum(1 - 1/nu_i)."""
    return 2 * c.genus - 2 + sum_weights(c.multiplicities)


def _excluded_case(c: OrbifoldCurve) -> Optional[str]:
    ms = c.multiplicities
    if len(ms) == 1 and not is_infinite(ms[0]):
        return "i"
    if len(ms) == 2 and ms[0] != ms[1]:
        return "ii"
    return None


def classify(c: OrbifoldCurve, ambient_is_P1: Optional[bool] = None) -> UniformizationClass:
    """Uniformization type of a compact orbifold curve.

    On the projective line the "teardrop" (one finite cone point) and the
    spindle with two unequal cone points have no uniformizing group and are
    reported as excluded.  Everything else is decided by the sign of the
    orbifold canonical degree.  ``ambient_is_P1`` defaults to ``genus == 0``.
    """
    if ambient_is_P1 is None:
        ambient_is_P1 = c.genus == 0
    if ambient_is_P1:
        if c.genus != 0:
            raise ValueError("the projective line has genus 0")
        case = _excluded_case(c)
        if case is not None:
            return UniformizationClass(Geometry.EXCLUDED, case)
    deg = canonical_degree(c)
    if deg < 0:
        return UniformizationClass(Geometry.SPHERICAL)
    if deg == 0:
        return UniformizationClass(Geometry.EUCLIDEAN)
    return UniformizationClass(Geometry.HYPERBOLIC)


def is_hyperbolic(c: OrbifoldCurve) -> bool:
    return canonical_degree(c) > 0


@dataclass(frozen=True)
class Area:
    pi_multiple: Fraction  # area = pi_multiple * pi

    @property
    def value(self) -> float:
        return float(self.pi_multiple) * math.pi


def hyperbolic_area(c: OrbifoldCurve) -> Area:
    """Area of M minus the log points for the pushed-forward Poincare metric."""
    cls = classify(c)
    if not cls.is_hyperbolic:
        raise ValueError(f"area is only defined for hyperbolic curves, got {cls}")
    return Area(2 * canonical_degree(c))


def p1_entire_curve_possible(marks: Sequence) -> bool:
    """True when sum(1 - 1/m_i) <= 2, i.e. a nonconstant orbifold entire
    curve into the projective line is not ruled out."""
    return sum_weights(as_multiplicity(m) for m in marks) <= 2


def induced_multiplicity(t: int, m: Multiplicity, classical: bool = False) -> Multiplicity:
    """Smallest multiplicity m' on a source point of contact order t.

    Non-classical morphisms need t * m' >= m, classical ones need
    t * m' to be a multiple of m.
    """
    if t < 1:
        raise ValueError("contact order must be >= 1")
    m = as_multiplicity(m)
    if is_infinite(m):
        return INF
    if classical:
        return m // math.gcd(t, m)
    return ceil_ratio(m, t)
