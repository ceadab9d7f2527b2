import math
from fractions import Fraction

import pytest

from curvelab.errors import PreconditionError
from curvelab.gauges import (AbsGauge, BallDescriptor, ConstantCalibration, PNormGauge, PowerCalibration,
                             ScaledGauge, SumGauge, Vector, calibrated_series_norm, calibration_from_rseminorm,
                             check_fake_triangle, check_sandwich, minkowski, partial_sum_bound,
                             triangle_companion)
from curvelab.scalar import QQ, Qp


def test_pnorm_values():
    assert PNormGauge(Fraction(1))(Vector.of([3, 4])) == 7
    assert PNormGauge(Fraction(1))(Vector.of([3, -4])) == 7
    half = PNormGauge(Fraction(1, 2))(Vector.of([3, 4]))
    assert math.isclose(half, (math.sqrt(3) + 2) ** 2, rel_tol=1e-12)


def test_abs_gauge_on_padic_vector():
    assert AbsGauge()(Vector.of([12], Qp(2))) == Fraction(1, 4)


def test_scaled_and_sum_gauges():
    x = Vector.of([1, -2])
    one = PNormGauge()
    assert ScaledGauge(one, Fraction(3))(x) == 9
    assert SumGauge((one, ScaledGauge(one, 2)))(x) == 9


def test_minkowski_examples():
    q3 = Qp(3)
    unit = BallDescriptor(AbsGauge(), Fraction(1), "closed")
    cands = [Fraction(c) for c in ("1", "3", "9", "1/3", "1/9")]
    assert minkowski(unit, Vector.of([9], q3), cands) == Fraction(1, 9)
    l1 = BallDescriptor(PNormGauge(), Fraction(1), "closed")
    assert minkowski(l1, Vector.of([2, 0]), [Fraction(1), Fraction(2), Fraction(4)]) == 2


def test_minkowski_without_witness_is_infinite():
    l1 = BallDescriptor(PNormGauge(), Fraction(1), "closed")
    assert minkowski(l1, Vector.of([100, 0]), [Fraction(1)]) == math.inf


def test_sandwich_holds_for_own_ball_and_fails_for_larger_gauge():
    one = PNormGauge()
    ball = BallDescriptor(one, Fraction(1), "open")
    samples = [Vector.of([Fraction(i, 3), Fraction(-j, 5)]) for i in range(-3, 4) for j in range(3)]
    assert check_sandwich(one, ball, samples).passed
    assert not check_sandwich(ScaledGauge(one, 2), ball, samples).passed


def test_triangle_companion():
    assert triangle_companion(PNormGauge(Fraction(1, 2))).factor == 4
    assert triangle_companion(AbsGauge(Qp(3))) == AbsGauge(Qp(3))
    assert triangle_companion(AbsGauge()).factor == 2


def test_power_calibration_factors_and_kind():
    c = calibration_from_rseminorm(PNormGauge(Fraction(1, 2)), Fraction(1, 2))
    assert isinstance(c, PowerCalibration) and c.kind == "strong"
    assert c.factor(3) == 64
    assert c[0] == PNormGauge(Fraction(1, 2))
    with pytest.raises(PreconditionError):
        calibration_from_rseminorm(PNormGauge(), 2)
    with pytest.raises(IndexError):
        c[-1]


def test_fake_triangle_checks():
    pairs = [(Vector.of([1, 2]), Vector.of([-3, 1])), (Vector.of([0, 0]), Vector.of([5, 5]))]
    strong = calibration_from_rseminorm(PNormGauge(Fraction(1, 2)), Fraction(1, 2))
    assert check_fake_triangle(strong, pairs, 4).passed
    assert check_fake_triangle(ConstantCalibration(PNormGauge()), pairs, 4).passed
    # the constant l^(1/2) calibration is not even a fake triangle family
    axes = [(Vector.of([1, 0]), Vector.of([0, 1]))]
    bad = check_fake_triangle(ConstantCalibration(PNormGauge(Fraction(1, 2))), axes, 1)
    assert not bad.passed


def test_shifted_calibration():
    c = ConstantCalibration(PNormGauge()).shifted(2, Fraction(3))
    assert c[0](Vector.of([1, 1])) == 6


def test_partial_sum_bound_and_series_norm():
    strong = calibration_from_rseminorm(PNormGauge(), 1)
    terms = [Vector.of([Fraction(1, 2**k)]) for k in range(5)]
    assert partial_sum_bound(terms, strong, 2, 4).passed
    assert calibrated_series_norm(terms, ConstantCalibration(PNormGauge())) == Fraction(31, 16)
    with pytest.raises(PreconditionError):
        partial_sum_bound(terms, strong, 3, 2)


def test_vector_dimension_and_field_checks():
    with pytest.raises(ValueError):
        Vector.of([1]) + Vector.of([1, 2])
    with pytest.raises(ValueError):
        Vector.of([1], Qp(2)) + Vector.of([1], QQ)
