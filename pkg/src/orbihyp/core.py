"""Exact extended arithmetic shared by the rest of the package.

Multiplicities live in {1, 2, 3, ...} U {inf}.  Finite values are plain
Python ints and infinity is ``math.inf`` (exported here as ``INF``), so that
``min``/``max``/comparisons and products like ``2 * INF`` behave naturally.
All coefficient arithmetic is done with :class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

INF = math.inf

Multiplicity = Union[int, float]


def is_infinite(m: Multiplicity) -> bool:
    return m == INF


def as_multiplicity(value) -> Multiplicity:
    """Validate and normalise a multiplicity.

    Accepts positive ints, ``math.inf`` and the strings ``"inf"``/``"∞"``.
    Integral floats such as ``3.0`` are converted to ``3``.
    """
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity", "∞", "+inf"):
            return INF
        try:
            value = int(value)
        except ValueError:
            raise ValueError(f"not a multiplicity: {value!r}") from None
    if isinstance(value, bool):
        raise TypeError("booleans are not multiplicities")
    if isinstance(value, float) and not isinstance(value, numbers.Integral):
        if value == INF:
            return INF
        if not value.is_integer():
            raise ValueError(f"multiplicity must be integral, got {value}")
        value = int(value)
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise ValueError(f"multiplicity must be integral, got {value}")
        value = int(value)
    if not isinstance(value, numbers.Integral):
        raise TypeError(f"not a multiplicity: {value!r}")
    value = int(value)
    if value < 1:
        raise ValueError(f"multiplicity must be >= 1, got {value}")
    return value


def format_multiplicity(m: Multiplicity) -> Union[int, str]:
    """JSON-friendly form: ints stay ints, infinity becomes ``"inf"``."""
    return "inf" if is_infinite(m) else int(m)


def reciprocal(m: Multiplicity) -> Fraction:
    """1/m as an exact rational, with 1/inf = 0."""
    m = as_multiplicity(m)
    return Fraction(0) if is_infinite(m) else Fraction(1, m)


def weight(m: Multiplicity) -> Fraction:
    """Orbifold coefficient 1 - 1/m of a divisor component (1 when m is inf)."""
    return 1 - reciprocal(m)


def ceil_div(a: int, m: Multiplicity) -> int:
    """Round-up of a/m; zero for m = inf so generators collapse to log ones."""
    if a < 0:
        raise ValueError("ceil_div expects a nonnegative numerator")
    m = as_multiplicity(m)
    if a == 0 or is_infinite(m):
        return 0
    return -(-a // m)


def ceil_ratio(m: Multiplicity, t: int) -> Multiplicity:
    """Smallest multiplicity m' with t * m' >= m; infinity is preserved."""
    if t < 1:
        raise ValueError("contact order t must be >= 1")
    m = as_multiplicity(m)
    if is_infinite(m):
        return INF
    return -(-m // t)


def mult_product(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    a, b = as_multiplicity(a), as_multiplicity(b)
    if is_infinite(a) or is_infinite(b):
        return INF
    return a * b


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, dict) and set(x) == {"num", "den"}:
        return Fraction(int(x["num"]), int(x["den"]))
    raise TypeError(f"refusing to build an exact rational from {type(x).__name__}")


@dataclass(frozen=True)
class FibrationFiberData:
    """Fibre of a fibration over the generic point of a divisor D.

    ``components`` holds pairs (m_j, m_Delta(D_j)): the multiplicity of the
    component D_j in f^*D and the multiplicity of D_j in the orbifold
    divisor upstairs (1 when D_j is not part of Delta).
    """

    components: Tuple[Tuple[int, Multiplicity], ...]
    exceptional_part_present: bool = False

    def __post_init__(self):
        comps = tuple((int(mj), as_multiplicity(md)) for mj, md in self.components)
        if not comps:
            raise ValueError("a fibre needs at least one non-exceptional component")
        for mj, _ in comps:
            if mj < 1:
                raise ValueError("fibre multiplicities are positive integers")
        object.__setattr__(self, "components", comps)


def fibration_multiplicity(data: FibrationFiberData, orbifold_aware: bool = False) -> Multiplicity:
    """Multiplicity of a divisor in the orbifold base of a fibration.

    Plain mode takes the infimum of the fibre multiplicities m_j.  The
    orbifold-aware mode weighs each component by its own multiplicity in
    the source divisor, inf_j m_j * m_Delta(D_j).
    """
    if orbifold_aware:
        return min(mult_product(mj, md) for mj, md in data.components)
    return min(mj for mj, _ in data.components)


@dataclass(frozen=True)
class Report:
    """Outcome of a criterion check.

    ``margins`` keeps exact values in insertion order; ``floats`` holds
    display-only numbers; ``flags`` lists applicability notes that callers
    should look at before trusting ``verdict``.
    """

    kind: str
    verdict: bool
    margins: Tuple[Tuple[str, Fraction], ...] = ()
    floats: Tuple[Tuple[str, float], ...] = ()
    flags: Tuple[str, ...] = ()
    theorem: str = ""
    details: dict = field(default_factory=dict, compare=False)

    def margin(self, name: str) -> Fraction:
        for key, value in self.margins:
            if key == name:
                return value
        raise KeyError(name)

    def float_value(self, name: str) -> float:
        return dict(self.floats)[name]


def sum_weights(ms: Iterable[Multiplicity]) -> Fraction:
    return sum((weight(m) for m in ms), Fraction(0))


def multiplicities(values: Sequence) -> Tuple[Multiplicity, ...]:
    return tuple(as_multiplicity(v) for v in values)
