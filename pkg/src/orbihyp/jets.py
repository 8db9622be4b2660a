"""Local generators of orbifold symmetric and jet differentials.

In a chart where Delta = {x_1^(1-1/m_1) ... x_n^(1-1/m_n) = 0}, a generator
is the log monomial prod (d^j x_i / x_i)^alpha[i][j-1] multiplied by
prod x_i^e_i with e_i = sum_j ceil(j * alpha[i][j-1] / m_i).  Only the
exponent data is produced.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .core import Multiplicity, as_multiplicity, ceil_div


@dataclass(frozen=True)
class LocalOrbifoldChart:
    multiplicities: Tuple[Multiplicity, ...]

    def __post_init__(self):
        ms = tuple(as_multiplicity(m) for m in self.multiplicities)
        if not ms:
            raise ValueError("chart dimension must be positive")
        object.__setattr__(self, "multiplicities", ms)

    @property
    def dim(self) -> int:
        return len(self.multiplicities)


@dataclass(frozen=True)
class JetMonomial:
    alpha: Tuple[Tuple[int, ...], ...]  # alpha[i][j-1]: coordinate i, order j
    exponents: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.alpha[0]) if self.alpha else 0

    @property
    def weight(self) -> int:
        return sum(j * a for row in self.alpha for j, a in enumerate(row, start=1))

    def pole_orders(self) -> Tuple[int, ...]:
        """Weighted pole order sum_j j*alpha[i][j-1] - e_i left in x_i after
        the prefactor.  Never exceeds sum_j j*alpha*(1 - 1/m_i)."""
        return tuple(sum(j * a for j, a in enumerate(row, start=1)) - e for row, e in zip(self.alpha, self.exponents))


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative ints summing to ``total``, in
    descending lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _weighted(total: int, weights: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Nonnegative tuples a with sum(w * a) == total, descending lex order."""
    if not weights:
        if total == 0:
            yield ()
        return
    w = weights[0]
    for first in range(total // w, -1, -1):
        for rest in _weighted(total - w * first, weights[1:]):
            yield (first,) + rest


def _exponents(chart: LocalOrbifoldChart, alpha) -> Tuple[int, ...]:
    return tuple(
        sum(ceil_div(j * a, m) for j, a in enumerate(row, start=1))
        for row, m in zip(alpha, chart.multiplicities)
    )


def symmetric_generators(chart: LocalOrbifoldChart, N: int) -> List[JetMonomial]:
    """Generators of S^N Omega_(X/Delta): one per composition of N into
    dim parts; there are binomial(N + n - 1, n - 1) of them."""
    if N < 1:
        raise ValueError("N must be positive")
    out = []
    for comp in _compositions(N, chart.dim):
        alpha = tuple((a,) for a in comp)
        out.append(JetMonomial(alpha, _exponents(chart, alpha)))
    return out


def jet_generators(chart: LocalOrbifoldChart, k: int, N: int) -> List[JetMonomial]:
    """Generators of E_{k,N} Omega_(X/Delta): matrices alpha (n x k) with
    |alpha_1| + 2|alpha_2| + ... + k|alpha_k| = N."""
    if k < 1:
        raise ValueError("jet order k must be >= 1")
    if N < 1:
        raise ValueError("N must be positive")
    n = chart.dim
    weights = [j for _ in range(n) for j in range(1, k + 1)]
    out = []
    for flat in _weighted(N, weights):
        alpha = tuple(tuple(flat[i * k:(i + 1) * k]) for i in range(n))
        out.append(JetMonomial(alpha, _exponents(chart, alpha)))
    return out


def snq_exponents(chart: LocalOrbifoldChart, blocks: Sequence[Sequence[int]]) -> List[int]:
    """Prefactor exponents ceil(k_j / m_j) for a generator of S^{N,q}.

    ``blocks`` are the index sets J_1..J_N (1-based, as the coordinates
    x_1..x_n); all must have the same size q and distinct entries.  k_j
    counts how often j occurs across the blocks.
    """
    n = chart.dim
    if not blocks:
        raise ValueError("at least one block is required")
    q = len(blocks[0])
    counts = [0] * n
    for b in blocks:
        idx = list(b)
        if len(idx) != q or q == 0:
            raise ValueError("all blocks must have the same positive size q")
        if len(set(idx)) != q:
            raise ValueError(f"block {idx} repeats an index")
        for j in idx:
            if not (isinstance(j, int) and 1 <= j <= n):
                raise ValueError(f"index {j!r} outside 1..{n}")
            counts[j - 1] += 1
    return [ceil_div(kj, m) for kj, m in zip(counts, chart.multiplicities)]
