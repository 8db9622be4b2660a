from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orbihyp.core import INF
from orbihyp.curves import OrbifoldCurve
from orbihyp.pullcurve import (
    IntersectionData,
    algebraic_hyperbolicity_gap,
    inequality_chain,
    is_orbifold_morphism,
    logarithmic_gap,
    minimal_structure,
    p1_curve_degeneracy_check,
    source_curve,
)

from support import brute_minimal, intersection_data


def data(components, contacts, genus=0, deg=1, n=2):
    return IntersectionData(genus, deg, n, tuple(components), tuple(map(tuple, contacts)))


def test_examples():
    assert minimal_structure(data([(2, 5)], [[2]])) == [3]
    assert minimal_structure(data([(1, INF), (1, 3)], [[1, 0], [0, 1]])) == [INF, 3]
    two = data([(2, 4), (3, 6)], [[2, 3]])
    assert minimal_structure(two, per_component=True) == [2]
    assert minimal_structure(two) == [2]  # paper mode: ceil(6/5)=2


def test_bezout_enforced():
    with pytest.raises(ValueError, match="Bezout"):
        data([(2, 3)], [[1]])
    with pytest.raises(ValueError):
        data([(1, 3), (1, 3)], [[1, 0], [0, 0], [0, 1]])
    with pytest.raises(ValueError):
        data([(1, 3)], [[1, 0]])


def test_logarithmic_case_matches_log_bound():
    d = data([(1, INF), (1, INF), (2, INF)], [[1, 0, 0], [0, 1, 1], [0, 0, 1]], genus=1)
    assert algebraic_hyperbolicity_gap(d) == logarithmic_gap(d)
    assert logarithmic_gap(d) == 2 * 1 - 2 + 3 - (4 - 4) * 1


def test_trivial_orbifold_gap():
    d = data([(3, 1)], [[1], [2]], genus=2, deg=1, n=3)
    assert algebraic_hyperbolicity_gap(d) == 2 * 2 - 2 + 2 * 3 * 1


def test_degeneracy_check_examples():
    assert p1_curve_degeneracy_check(OrbifoldCurve.from_multiplicities(0, [3, 3, 5]))
    assert not p1_curve_degeneracy_check(OrbifoldCurve.from_multiplicities(0, [2, 2, 2, 2]))
    assert p1_curve_degeneracy_check(OrbifoldCurve.from_multiplicities(2, [7]))


def test_source_curve_drops_trivial_points():
    d = data([(1, 2), (1, 5)], [[1, 0], [0, 1]])
    c = source_curve(d)
    assert c.multiplicities == (2, 5)
    d = data([(2, 2)], [[2]])
    assert source_curve(d).marks == ()


@given(intersection_data(), st.booleans())
def test_minimal_structure_is_brute_force_minimal(d, per):
    ms = minimal_structure(d, per)
    assert ms == brute_minimal(d, per)
    assert is_orbifold_morphism(d, ms, per)
    for i, m in enumerate(ms):
        if m != INF and m > 1:
            smaller = list(ms)
            smaller[i] = m - 1
            assert not is_orbifold_morphism(d, smaller, per)


@given(intersection_data())
def test_per_component_dominates(d):
    assert all(a >= b for a, b in zip(minimal_structure(d, True), minimal_structure(d)))


@given(intersection_data(), st.booleans())
def test_inequality_chain(d, per):
    chain = inequality_chain(d, per)
    assert chain.contact_sum == chain.bezout_sum
    assert chain.holds()
    assert chain.gap >= chain.log_gap


@given(intersection_data(), st.randoms())
def test_gap_permutation_invariant(d, rnd):
    rows = list(d.contacts)
    rnd.shuffle(rows)
    perm = list(range(len(d.components)))
    rnd.shuffle(perm)
    shuffled = IntersectionData(
        d.genus, d.curve_degree, d.ambient_dim,
        tuple(d.components[j] for j in perm),
        tuple(tuple(r[j] for j in perm) for r in rows),
    )
    assert algebraic_hyperbolicity_gap(shuffled) == algebraic_hyperbolicity_gap(d)
    assert isinstance(algebraic_hyperbolicity_gap(d), Fraction)
