import math
from collections import Counter

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from orbihyp.core import INF
from orbihyp.nevanlinna import (
    PolynomialCurve,
    ZeroDivisor,
    counting_function,
    defect_estimate,
    fmt_residual,
    order_function,
    pullback_divisor,
    square_free_parts,
)

z = sympy.symbols("z")


def coeffs_low_first(expr):
    return [complex(c) for c in reversed(sympy.Poly(expr, z).all_coeffs())]


def test_counting_examples():
    assert counting_function(ZeroDivisor(((0, 3),)), math.e, 2) == pytest.approx(2.0, abs=1e-15)
    assert counting_function(ZeroDivisor(()), 10.0) == 0
    assert counting_function(ZeroDivisor(((2, 1),)), 1.5) == 0
    with pytest.raises(ValueError):
        counting_function(ZeroDivisor(()), 0.5)
    with pytest.raises(ValueError):
        ZeroDivisor(((1, 1), (1, 2)))


def test_pullback_examples():
    assert pullback_divisor(PolynomialCurve.monomial(4), [0, 1]).multiplicities() == [4]
    E = pullback_divisor(PolynomialCurve.of([1], [-1, 0, 1]), [0, 1])
    assert sorted(round(w.real) for w, _ in E.zeros) == [-1, 1]
    f = PolynomialCurve.of([1], coeffs_low_first((z - 2) ** 3 * (z + 1)))
    E = pullback_divisor(f, [0, 1])
    assert sorted(E.multiplicities()) == [1, 3]
    for w, m in E.zeros:
        assert abs(w - (2 if m == 3 else -1)) < 1e-6


def test_curve_errors():
    with pytest.raises(ValueError, match="common zero"):
        PolynomialCurve.of([-1, 1], [-1, 0, 1])
    with pytest.raises(ValueError):
        PolynomialCurve.of([1])
    with pytest.raises(ValueError, match="image in H"):
        pullback_divisor(PolynomialCurve.of([1], [0, 1], [0, 2]), [0, 2, -1])
    with pytest.raises(ValueError):
        order_function(PolynomialCurve.monomial(1), 0.5)
    with pytest.raises(ValueError, match="constant"):
        defect_estimate(PolynomialCurve.of([1], [2]), [1, 0])


def test_constant_curve_has_zero_order():
    assert order_function(PolynomialCurve.of([1], [2]), 50.0) == 0


@pytest.mark.parametrize("m", [2, 3, 5])
def test_monomial_defect(m):
    est = defect_estimate(PolynomialCurve.monomial(m), [0, 1], l=1, r_max=1e3)
    assert abs(est.value - (1 - 1 / m)) < 1e-3
    assert len(est.trajectory) == len(est.radii) == 12


def test_defect_generic_and_omitted_hyperplanes():
    f = PolynomialCurve.monomial(2)
    assert abs(defect_estimate(f, [1, 1], l=INF).value) < 1e-3
    assert abs(defect_estimate(f, [1, 1], l=1).value) < 1e-3
    assert defect_estimate(f, [1, 0], l=1).value == pytest.approx(1.0)


@pytest.mark.parametrize("d", range(1, 7))
def test_order_slope(d):
    r = 1e3
    assert abs(order_function(PolynomialCurve.monomial(d), r) / math.log(r) - d) < 1e-2


def test_fubini_study_slope_converges():
    r = 1e3
    T = order_function(PolynomialCurve.monomial(3), r, norm="fubini-study")
    assert abs(T / math.log(r) - 3) < 0.1
    with pytest.raises(ValueError):
        order_function(PolynomialCurve.monomial(3), r, norm="euclid")


@st.composite
def factored(draw):
    roots = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=4, unique=True))
    mults = [draw(st.integers(1, 4)) for _ in roots]
    assume(sum(mults) <= 10)
    return roots, mults


@given(factored())
@settings(deadline=None, max_examples=60)
def test_multiplicities_match_sympy(case):
    roots, mults = case
    expr = sympy.expand(sympy.Mul(*[(z - a) ** k for a, k in zip(roots, mults)]))
    oracle = Counter()
    for factor, k in sympy.sqf_list(expr)[1]:
        oracle[k] += sympy.degree(factor, z)
    ours = Counter()
    for part, k in square_free_parts(coeffs_low_first(expr)):
        ours[k] += len(part) - 1
    assert ours == oracle
    f = PolynomialCurve.of([1], coeffs_low_first(expr))
    assert Counter(pullback_divisor(f, [0, 1]).multiplicities()) == Counter(mults)


@given(
    st.lists(st.tuples(st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False),
                       st.integers(1, 5)), max_size=6),
    st.floats(1, 1e4),
    st.integers(1, 6),
)
def test_truncation_chain(zeros, r, l):
    pts = {}
    for w, k in zeros:
        pts.setdefault(w, k)
    E = ZeroDivisor(tuple(pts.items()))
    N1 = counting_function(E, r, 1)
    Nl = counting_function(E, r, l)
    Nl1 = counting_function(E, r, l + 1)
    N = counting_function(E, r)
    slack = 1e-12 * (1 + N)
    assert N1 <= Nl + slack and Nl <= Nl1 + slack and Nl1 <= N + slack
    assert Nl <= l * N1 + slack
    m = min(pts.values(), default=1)
    assert N >= m / l * Nl - slack or m < l


@given(st.integers(1, 6), st.integers(1, 4), st.floats(1, 1e4))
def test_ramification_bound(m, l, r):
    # every preimage of H has multiplicity >= m
    E = ZeroDivisor(((0, m), (3.0, m + 1), (-20j, 2 * m)))
    if m >= l:
        assert counting_function(E, r) >= m / l * counting_function(E, r, l) * (1 - 1e-12)


@st.composite
def random_curve(draw):
    deg = draw(st.integers(1, 6))
    coeff = st.integers(-5, 5)
    a = draw(st.lists(coeff, min_size=deg + 1, max_size=deg + 1))
    b = draw(st.lists(coeff, min_size=1, max_size=deg + 1))
    assume(a[-1] != 0 and any(b))
    H = draw(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
    assume(any(H))
    try:
        f = PolynomialCurve.of(a, b)
        pullback_divisor(f, H)
    except ValueError:
        assume(False)
    return f, H


@given(random_curve())
@settings(deadline=None, max_examples=25)
def test_fmt_residual_constant(case):
    f, H = case
    values = [fmt_residual(f, H, r) for r in np.geomspace(10, 1e3, 5)]
    assert max(values) - min(values) < 1e-6
