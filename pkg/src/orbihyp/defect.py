"""Degeneracy and hyperbolic-embedding criteria for (P^n / Delta) with Delta
supported on hyperplanes in general position, via Nochka's defect relation.

Everything here is exact rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Tuple, Union

from .core import Multiplicity, Report, as_multiplicity, sum_weights

GENERAL_POSITION_FLAG = "general-position-assumed"
MAX_EXHAUSTIVE_Q = 20


@dataclass(frozen=True)
class ArrangementSpec:
    n: int
    q: int
    multiplicities: Tuple[Multiplicity, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be >= 1")
        ms = tuple(as_multiplicity(m) for m in self.multiplicities)
        if self.q < 1:
            raise ValueError("an arrangement needs at least one hyperplane")
        if len(ms) != self.q:
            raise ValueError(f"expected {self.q} multiplicities, got {len(ms)}")
        object.__setattr__(self, "multiplicities", ms)

    @classmethod
    def of(cls, n: int, ms: Iterable) -> "ArrangementSpec":
        ms = tuple(ms)
        return cls(n, len(ms), ms)


def orbifold_degree(a: Union[ArrangementSpec, Iterable]) -> Fraction:
    """deg Delta = sum(1 - 1/m_i); hyperplanes have degree one.

    Also accepts a bare iterable of multiplicities (possibly empty).
    """
    ms = a.multiplicities if isinstance(a, ArrangementSpec) else a
    return sum_weights(as_multiplicity(m) for m in ms)


def nochka_bound(N: int, n: int) -> int:
    """Right-hand side 2N - n + 1 of the defect relation for hyperplanes
    in N-subgeneral position in P^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if N < n:
        raise ValueError(f"subgeneral index N={N} must be >= n={n}")
    return 2 * N - n + 1


def degree_threshold(q: int, n: int) -> Fraction:
    """q - q/n + 1 + 1/n."""
    return q - Fraction(q, n) + 1 + Fraction(1, n)


def degeneracy_margins(a: ArrangementSpec) -> Tuple[Fraction, ...]:
    """margin(l) = l deg Delta - (l-1) q - (2n - l + 1) for l = 1..n.

    l deg Delta - (l-1) q is the lower bound for the sum of truncated
    defects forced by the ramification; 2n - l + 1 is Nochka's bound for a
    curve spanning a P^l (n-subgeneral position there).
    """
    deg = orbifold_degree(a)
    n, q = a.n, a.q
    return tuple(l * deg - (l - 1) * q - nochka_bound(n, l) for l in range(1, n + 1))


def degeneracy_check(a: ArrangementSpec) -> Report:
    margins = degeneracy_margins(a)
    return Report(
        kind="nochka",
        verdict=all(m > 0 for m in margins),
        margins=tuple((f"l={l}", m) for l, m in enumerate(margins, start=1)),
        floats=tuple((f"l={l}", float(m)) for l, m in enumerate(margins, start=1)),
        flags=(GENERAL_POSITION_FLAG,),
        theorem="orbifold-nochka-degeneracy",
    )


def _subset_margins(a: ArrangementSpec, subset: Tuple[int, ...]):
    n, q = a.n, a.q
    k = len(subset)
    rest = [m for i, m in enumerate(a.multiplicities) if i not in subset]
    count_margin = Fraction((q - k) - 2 * (n - k))
    degree_margin = orbifold_degree(rest) - degree_threshold(q - k, n - k)
    return count_margin, degree_margin


def embedding_check(a: ArrangementSpec, exhaustive: bool = False) -> Report:
    """Hypotheses q > 2n and deg Delta > q - q/n + 1 + 1/n for hyperbolicity
    and hyperbolic embedding of (P^n / Delta).

    With ``exhaustive`` every subset I of size k = 1..n-1 is swept: on the
    linear space L_I the remaining q - k hyperplanes must again satisfy
    q - k > 2(n - k) and deg Delta_J > (q-k) - (q-k)/(n-k) + 1 + 1/(n-k).
    Subsets violating either are listed in ``details["failing_subsets"]``.
    """
    n, q = a.n, a.q
    count_margin = Fraction(q - 2 * n)
    degree_margin = orbifold_degree(a) - degree_threshold(q, n)
    margins = [("q-2n", count_margin), ("degree", degree_margin)]
    verdict = count_margin > 0 and degree_margin > 0
    details = {}
    flags = [GENERAL_POSITION_FLAG]
    if exhaustive:
        if q > MAX_EXHAUSTIVE_Q:
            raise ValueError(f"exhaustive sweep refused for q={q} > {MAX_EXHAUSTIVE_Q}")
        failing = []
        worst = None
        checked = 0
        for k in range(1, n):
            for subset in combinations(range(q), k):
                checked += 1
                cm, dm = _subset_margins(a, subset)
                if worst is None or dm < worst:
                    worst = dm
                if not (cm > 0 and dm > 0):
                    failing.append({"subset": list(subset), "count_margin": cm, "degree_margin": dm})
        details["subsets_checked"] = checked
        details["failing_subsets"] = failing
        if worst is not None:
            margins.append(("worst-subset-degree", worst))
        verdict = verdict and not failing
        flags.append("exhaustive")
    return Report(
        kind="nochka-embedding",
        verdict=verdict,
        margins=tuple(margins),
        floats=tuple((name, float(v)) for name, v in margins),
        flags=tuple(flags),
        theorem="orbifold-hyperplane-hyperbolic-embedding",
        details=details,
    )
