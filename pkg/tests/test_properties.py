"""Randomized properties via hypothesis."""
import math
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from curvelab.diffquot import Polynomial, WholeField, diff_quot, diff_quot_coincident
from curvelab.gauges import PNormGauge, Vector, calibration_from_rseminorm, check_fake_triangle
from curvelab.leibniz import expand, verify_numeric
from curvelab.oracles import newton_divided_difference
from curvelab.scalar import QQ, Qp

fields = st.sampled_from([QQ, Qp(2), Qp(3), Qp(5)])
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
nonzero = rationals.filter(bool)
coeffs = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=4), min_size=1, max_size=9)


def distinct(n):
    return st.lists(rationals, min_size=n, max_size=n, unique=True)


@given(fields, rationals, rationals)
def test_padic_multiplicative_and_ultrametric(f, x, y):
    assert f.abs(x * y) == f.abs(x) * f.abs(y)
    if f.is_ultrametric:
        assert f.abs(x + y) <= max(f.abs(x), f.abs(y))
        if f.abs(y) < f.abs(x):
            assert f.abs(x + y) == f.abs(x)


@settings(max_examples=60)
@given(fields, coeffs, st.integers(0, 5).flatmap(lambda k: distinct(k + 1)), st.randoms())
def test_symmetry_and_newton(f, cs, pts, rnd):
    c = Polynomial.scalar(cs, WholeField(f))
    k = len(pts) - 1
    perm = list(pts)
    rnd.shuffle(perm)
    base = diff_quot(c, k, pts)
    assert diff_quot(c, k, perm) == base
    assert base.coords[0] == newton_divided_difference([c.value(x)[0] for x in pts], pts)


@settings(max_examples=60)
@given(fields, coeffs, st.integers(1, 5).flatmap(lambda k: distinct(k + 1)))
def test_recursion_identity(f, cs, pts):
    c = Polynomial.scalar(cs, WholeField(f))
    k = len(pts) - 1
    hi = diff_quot(c, k - 1, (pts[-1],) + tuple(pts[1:-1]))
    lo = diff_quot(c, k - 1, pts[:-1])
    assert diff_quot(c, k, pts).coords[0] * (pts[-1] - pts[0]) == (hi - lo).coords[0]


@settings(max_examples=60)
@given(coeffs, st.integers(0, 6), rationals)
def test_derivative_identity(cs, k, x):
    c = Polynomial.scalar(cs)
    d = c
    for _ in range(k):
        d = d.derivative()
    assert math.factorial(k) * diff_quot(c, k, [x] * (k + 1)).coords[0] == d.value(x)[0]
    assert diff_quot_coincident(c, k, x) == diff_quot(c, k, [x] * (k + 1))


@settings(max_examples=30)
@given(fields, coeffs, coeffs, st.integers(1, 4).flatmap(lambda n: distinct(n + 1)))
def test_leibniz_numeric(f, a, b, pts):
    n = len(pts) - 1
    g = Polynomial.scalar(a, WholeField(f))
    e = Polynomial.scalar(b, WholeField(f))
    assert verify_numeric(expand(n), g, e, pts).passed


vec = st.lists(rationals, min_size=3, max_size=3).map(Vector.of)


@settings(max_examples=60)
@given(vec, vec)
def test_fake_ultrametric_for_power_calibration(x, y):
    cal = calibration_from_rseminorm(PNormGauge(Fraction(1, 2)), Fraction(1, 2))
    assert check_fake_triangle(cal, [(x, y)], 3).passed


@given(vec, nonzero)
def test_pnorm_homogeneity(x, t):
    q = PNormGauge()
    assert q(x.scale(t)) == abs(t) * q(x)
