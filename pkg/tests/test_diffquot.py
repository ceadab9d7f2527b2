import math
import random
from fractions import Fraction
from itertools import permutations

import pytest

from curvelab.diffquot import (PAdicBall, Polynomial, RealInterval, Session, WholeField, certified_upper,
                               complete_homogeneous, diff_quot, diff_quot_coincident, extend_by_zero,
                               restrict, scale, sup_gauge, translate)
from curvelab.errors import CoincidentPointsError, DomainError, PreconditionError
from curvelab.gauges import AbsGauge, PNormGauge
from curvelab.glue_re import Cutoff
from curvelab.oracles import coincident_limit, newton_divided_difference
from curvelab.samplers import PAdicGridSampler, RealSampler
from curvelab.scalar import QQ, Qp

CUBE = Polynomial.scalar([0, 0, 0, 1])


def test_small_examples():
    assert diff_quot(CUBE, 2, [0, 1, 2]).coords == (3,)
    assert diff_quot(CUBE, 0, [3]).coords == (27,)
    assert diff_quot(Polynomial.scalar([5]), 1, [2, 7]).coords == (0,)
    assert diff_quot(Polynomial.scalar([0, 1]), 1, [2, 7]).coords == (1,)
    assert diff_quot(Polynomial.scalar([0, 0, 1]), 1, [2, 6]).coords == (8,)


def test_coincident_points_use_symbolic_path():
    assert diff_quot(CUBE, 2, [1, 1, 1]).coords == (3,)
    assert diff_quot_coincident(CUBE, 2, 1).coords == (3,)
    assert diff_quot_coincident(CUBE, 5, 2).coords == (0,)
    # partially coincident tuple: x^3<2>(0, 0, 1) = 0 + 0 + 1
    assert diff_quot(CUBE, 2, [0, 0, 1]).coords == (1,)


def test_vector_valued_polynomial():
    c = Polynomial(((0, 1), (1, 0, 1)))
    assert diff_quot(c, 1, [1, 3]).coords == (1, 4)


def test_complete_homogeneous():
    assert complete_homogeneous([1, 2], 2) == [1, 3, 7]
    assert complete_homogeneous([5], 3) == [1, 5, 25, 125]


def test_order_and_domain_preconditions():
    with pytest.raises(PreconditionError):
        diff_quot(CUBE, 2, [0, 1])
    with pytest.raises(PreconditionError):
        diff_quot(CUBE, -1, [])
    ball = PAdicBall(Fraction(0), Fraction(1, 3), Qp(3))
    with pytest.raises(DomainError):
        diff_quot(Polynomial.scalar([0, 1], ball), 1, [0, 1])


def test_non_polynomial_needs_distinct_points():
    h = Cutoff(Fraction(1), Fraction(1))
    with pytest.raises(CoincidentPointsError):
        diff_quot(h, 1, [Fraction(1, 2), Fraction(1, 2)])
    with pytest.raises(CoincidentPointsError):
        diff_quot(h, 1, [0.5, 0.5 + 1e-9])


@pytest.mark.parametrize("field", [QQ, Qp(2), Qp(3), Qp(5)])
def test_symmetry_with_ordered_session(field):
    rng = random.Random(str(field))
    for _ in range(5):
        c = Polynomial.scalar([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(7)],
                              WholeField(field))
        pts = [Fraction(rng.randint(-30, 30), rng.randint(1, 5)) for _ in range(4)]
        pts = list(dict.fromkeys(pts))
        k = len(pts) - 1
        s = Session(ordered=True)
        base = diff_quot(c, k, pts, s)
        assert all(diff_quot(c, k, p, s) == base for p in permutations(pts))
        assert base.coords[0] == newton_divided_difference([c.value(x)[0] for x in pts], pts)


def test_symmetric_session_shares_entries():
    s = Session()
    diff_quot(CUBE, 2, [0, 1, 2], s)
    n = len(s)
    diff_quot(CUBE, 2, [2, 0, 1], s)
    assert len(s) == n


def test_derivative_identity_and_limit():
    c = Polynomial.scalar([1, -2, 0, 3, 1])
    for k in range(6):
        d = c
        for _ in range(k):
            d = d.derivative()
        x = Fraction(2, 3)
        assert math.factorial(k) * diff_quot(c, k, [x] * (k + 1)).coords[0] == d.value(x)[0]
        assert coincident_limit(c, k, x, c.degree) == diff_quot_coincident(c, k, x).coords


def test_translate_and_scale_laws():
    c = Polynomial.scalar([1, 2, 3, 4])
    pts = [Fraction(1), Fraction(-2), Fraction(5, 2)]
    assert diff_quot(translate(c, 3), 2, pts) == diff_quot(c, 2, [x + 3 for x in pts])
    assert diff_quot(scale(c, 2), 2, pts) == diff_quot(c, 2, [2 * x for x in pts]).scale(4)
    assert diff_quot(scale(c, 2), 2, [1, 1, 1]) == diff_quot(c, 2, [2, 2, 2]).scale(4)
    assert diff_quot(translate(c, 3), 2, [0, 0, 0]) == diff_quot(c, 2, [3, 3, 3])


def test_extend_by_zero_mixed_tuple():
    q3 = Qp(3)
    ball = PAdicBall(Fraction(0), Fraction(1, 3), q3)
    c = Polynomial.scalar([1, 1], ball)
    eta = extend_by_zero(c)
    # inside 0, outside 1: (0 - 1) / (1 - 0)
    assert diff_quot(eta, 1, [0, 1]).coords == (-1,)
    assert diff_quot(eta, 1, [1, 0]).coords == (-1,)
    assert diff_quot(eta, 1, [1, 2]).coords == (0,)
    assert diff_quot(eta, 2, [0, 3, 6]) == diff_quot(c, 2, [0, 3, 6])
    assert diff_quot(eta, 2, [0, 0, 1]).coords == (Fraction(-2),)


def test_extend_by_zero_on_real_interval():
    c = Polynomial.scalar([0, 0, 1], RealInterval(Fraction(-1), Fraction(1)))
    eta = extend_by_zero(c)
    assert diff_quot(eta, 1, [Fraction(1, 2), 2]).coords == (Fraction(-1, 6),)


def test_restriction_reduces_sup():
    f = Qp(3)
    big = Polynomial.scalar([0, 1, 1, 1], PAdicBall(Fraction(0), Fraction(9), f))
    small = restrict(big, PAdicBall(Fraction(0), Fraction(1), f))
    q = AbsGauge()
    for k in range(3):
        assert certified_upper(small, k, q) <= certified_upper(big, k, q)
    with pytest.raises(DomainError):
        restrict(small, PAdicBall(Fraction(0), Fraction(27), f))


def test_sup_gauge_bracket_is_tight_for_linear_curve():
    ball = PAdicBall(Fraction(0), Fraction(1, 3), Qp(3))
    e = sup_gauge(Polynomial.scalar([0, 3], ball), 1, AbsGauge(), PAdicGridSampler(depth=3))
    assert e.lower == e.upper == Fraction(1, 3)


def test_certified_upper_on_monomials():
    f = Qp(5)
    for R_exp in (-1, 0, 2):
        R = Fraction(5) ** R_exp
        ball = PAdicBall(Fraction(0), R, f)
        for m in range(5):
            for k in range(m + 1):
                mono = Polynomial.scalar([0] * m + [1], ball)
                assert certified_upper(mono, k, AbsGauge()) == R ** (m - k)


def test_certified_upper_pnorm_on_vector_curve():
    ball = PAdicBall(Fraction(0), Fraction(1, 2), Qp(2))
    c = Polynomial(((1, 2), (0, 0, 4)), ball)
    est = sup_gauge(c, 1, PNormGauge(), PAdicGridSampler(depth=3))
    assert est.lower <= est.upper


def test_real_float_tuples():
    h = Cutoff(Fraction(1), Fraction(1, 2))
    s = RealSampler(n_tuples=50)
    ts = s.tuples(RealInterval(Fraction(-2), Fraction(2)), 3)
    for t in ts:
        assert len(set(t)) == 3
        diff_quot(h, 2, t)
