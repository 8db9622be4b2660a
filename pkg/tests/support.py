"""Shared generators and brute-force oracles for the test suite."""
import random

from hypothesis import strategies as st

from orbihyp.core import INF
from orbihyp.pullcurve import IntersectionData

multiplicity = st.one_of(st.integers(1, 50), st.just(INF))


@st.composite
def intersection_data(draw, max_value=50):
    """Random contact records obeying Bezout and the nonzero-row rule."""
    q = draw(st.integers(1, 4))
    n = draw(st.integers(1, 4))
    deg_c = draw(st.integers(1, 4))
    degrees = [draw(st.integers(1, 5)) for _ in range(q)]
    points = draw(st.integers(1, 6))
    columns = []
    for d in degrees:
        total = deg_c * d
        cuts = sorted(draw(st.lists(st.integers(0, total), min_size=points - 1, max_size=points - 1)))
        bounds = [0] + cuts + [total]
        columns.append([bounds[i + 1] - bounds[i] for i in range(points)])
    rows = [tuple(col[i] for col in columns) for i in range(points)]
    rows = [r for r in rows if any(r)]
    ms = [draw(st.one_of(st.integers(1, max_value), st.just(INF))) for _ in range(q)]
    return IntersectionData(
        genus=draw(st.integers(0, 3)),
        curve_degree=deg_c,
        ambient_dim=n,
        components=tuple(zip(degrees, ms)),
        contacts=tuple(rows),
    )


def random_intersection_data(rng: random.Random, max_value=50) -> IntersectionData:
    """Plain-random twin of :func:`intersection_data` for fixed-size sweeps."""
    q, n, deg_c = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
    degrees = [rng.randint(1, 5) for _ in range(q)]
    points = rng.randint(1, 6)
    columns = []
    for d in degrees:
        total = deg_c * d
        cuts = sorted(rng.randint(0, total) for _ in range(points - 1))
        bounds = [0] + cuts + [total]
        columns.append([bounds[i + 1] - bounds[i] for i in range(points)])
    rows = [r for r in (tuple(col[i] for col in columns) for i in range(points)) if any(r)]
    ms = [INF if rng.random() < 0.15 else rng.randint(1, max_value) for _ in range(q)]
    return IntersectionData(rng.randint(0, 3), deg_c, n, tuple(zip(degrees, ms)), tuple(rows))


def brute_minimal(d: IntersectionData, per_component: bool = False):
    """Smallest m' per source point with m' * order >= m_j for every
    component through it, found by trying m' = 1, 2, ..."""
    out = []
    for row in d.contacts:
        hits = [(m, t) for (_, m), t in zip(d.components, row) if t > 0]
        if any(m == INF for m, _ in hits):
            out.append(INF)
            continue
        total = sum(row)
        out.append(next(
            k for k in range(1, 10**6)
            if all(k * (t if per_component else total) >= m for m, t in hits)
        ))
    return out
