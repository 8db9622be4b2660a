import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orbihyp.core import INF, weight
from orbihyp.curves import (
    Geometry,
    OrbifoldCurve,
    canonical_degree,
    classify,
    hyperbolic_area,
    induced_multiplicity,
    is_hyperbolic,
    p1_entire_curve_possible,
)

marks = st.lists(st.one_of(st.integers(2, 50), st.just(INF)), max_size=6)


def curve(g, *ms):
    return OrbifoldCurve.from_multiplicities(g, ms)


def test_canonical_degree_examples():
    assert canonical_degree(curve(0, 2, 2, 3)) == Fraction(-1, 3)
    assert canonical_degree(curve(0, 3, 3, 5)) == Fraction(2, 15)
    assert canonical_degree(curve(1)) == 0


def test_classify_examples():
    c = classify(curve(0, 5), ambient_is_P1=True)
    assert c.geometry is Geometry.EXCLUDED and c.reason == "i"
    assert classify(curve(0, 2, 3)).reason == "ii"
    assert classify(curve(0, 2, 3, 7)).geometry is Geometry.HYPERBOLIC
    assert canonical_degree(curve(0, 2, 3, 7)) == Fraction(1, 42)
    assert classify(curve(0, 2, 3, 6)).geometry is Geometry.EUCLIDEAN
    assert classify(curve(0, 2, 2, 3)).geometry is Geometry.SPHERICAL


def test_exclusions_only_for_projective_line():
    # a single infinite point or two equal points is a genuine orbifold
    assert classify(curve(0, INF)).geometry is Geometry.SPHERICAL
    assert classify(curve(0, 4, 4)).geometry is Geometry.SPHERICAL
    assert classify(curve(2, 5)).geometry is Geometry.HYPERBOLIC
    with pytest.raises(ValueError):
        classify(curve(1, 5), ambient_is_P1=True)


def test_area_examples():
    a = hyperbolic_area(curve(0, 2, 3, 7))
    assert a.pi_multiple == Fraction(1, 21)
    assert a.value == pytest.approx(math.pi / 21, rel=1e-15)
    assert hyperbolic_area(curve(2)).pi_multiple == 4
    with pytest.raises(ValueError):
        hyperbolic_area(curve(0, 2, 3, 6))


def test_p1_bound_examples():
    assert p1_entire_curve_possible([2, 2, 3])
    assert not p1_entire_curve_possible([3, 3, 5])
    assert p1_entire_curve_possible([INF, INF])


def test_induced_examples():
    assert induced_multiplicity(2, 3, classical=True) == 3
    assert induced_multiplicity(2, 3) == 2
    assert induced_multiplicity(2, 5) == 3
    assert induced_multiplicity(4, INF) == INF and induced_multiplicity(4, INF, True) == INF


def test_tangency_arithmetic():
    target = (3, 3, 5)
    classical = [induced_multiplicity(2, m, True) for m in target]
    loose = [induced_multiplicity(2, m) for m in target]
    assert classical == [3, 3, 5] and loose == [2, 2, 3]
    assert canonical_degree(curve(0, *loose)) < 0 < canonical_degree(curve(0, *classical))


def test_curve_validation():
    with pytest.raises(ValueError):
        curve(0, 1)
    with pytest.raises(ValueError):
        OrbifoldCurve(0, (("a", 2), ("a", 3)))
    with pytest.raises(ValueError):
        curve(-1)


@given(st.integers(0, 4), marks)
def test_degree_is_exact_sum(g, ms):
    assert canonical_degree(curve(g, *ms)) == 2 * g - 2 + sum((weight(m) for m in ms), Fraction(0))


@given(st.integers(0, 4), marks, st.randoms())
def test_degree_permutation_invariant(g, ms, rnd):
    shuffled = list(ms)
    rnd.shuffle(shuffled)
    assert canonical_degree(curve(g, *ms)) == canonical_degree(curve(g, *shuffled))


@given(st.integers(0, 4), marks)
def test_hyperbolic_iff_positive_degree(g, ms):
    c = curve(g, *ms)
    cls = classify(c)
    if cls.geometry is not Geometry.EXCLUDED:
        assert cls.is_hyperbolic == (canonical_degree(c) > 0) == is_hyperbolic(c)


@given(st.integers(1, 100), st.integers(1, 100))
def test_classical_dominates(t, m):
    cl, nc = induced_multiplicity(t, m, True), induced_multiplicity(t, m)
    assert cl >= nc
    assert cl == min(k for k in range(1, m + 1) if (t * k) % m == 0)
    assert nc == min(k for k in range(1, m + 1) if t * k >= m)
