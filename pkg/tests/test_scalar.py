from fractions import Fraction

import pytest

from curvelab import errors
from curvelab.scalar import (QQ, FieldContext, Qp, Scalar, abs_value, format_scalar, in_closed_ball,
                             magnitude_to_json, parse_scalar, ultrametric_sum_law)


def test_padic_absolute_values():
    assert abs_value(Scalar(12, Qp(2))) == Fraction(1, 4)
    assert abs_value(Scalar(Fraction(5, 6), Qp(3))) == 3
    assert abs_value(Scalar(0, Qp(3))) == 0
    assert abs_value(Scalar(Fraction(-7, 2), QQ)) == Fraction(7, 2)


def test_valuation_of_zero_is_none():
    assert Qp(5).valuation(0) is None
    assert Qp(5).valuation(Fraction(25, 3)) == 2


def test_strict_ultrametric_law():
    assert ultrametric_sum_law(Scalar(1, Qp(3)), Scalar(9, Qp(3))) == 1
    assert ultrametric_sum_law(Scalar(2, Qp(5)), Scalar(0, Qp(5))) == 1
    with pytest.raises(errors.PreconditionError):
        ultrametric_sum_law(Scalar(1, Qp(3)), Scalar(2, Qp(3)))
    with pytest.raises(errors.PreconditionError):
        ultrametric_sum_law(Scalar(3, QQ), Scalar(1, QQ))


def test_mixing_fields_is_rejected():
    with pytest.raises(errors.ContextMismatchError):
        Scalar(1, Qp(2)) + Scalar(1, Qp(3))
    with pytest.raises(errors.ContextMismatchError):
        ultrametric_sum_law(Scalar(1, Qp(2)), Scalar(4, Qp(3)))


def test_floats_are_not_padic():
    with pytest.raises(TypeError):
        Qp(3).coerce(0.5)
    assert QQ.coerce(0.5) == 0.5


def test_field_validation():
    with pytest.raises(ValueError):
        Qp(4)
    with pytest.raises(ValueError):
        FieldContext("archimedean", 3)


def test_closed_balls():
    q3 = Qp(3)
    assert in_closed_ball(Scalar(4, q3), Scalar(1, q3), Fraction(1, 3))
    assert not in_closed_ball(Scalar(2, q3), Scalar(1, q3), Fraction(1, 3))
    with pytest.raises(errors.PreconditionError):
        in_closed_ball(Scalar(2, q3), Scalar(1, q3), 0)


def test_ball_exponent_rounds_radius_to_power_of_p():
    q3 = Qp(3)
    assert q3.ball_exponent(Fraction(1, 3)) == 1
    assert q3.ball_exponent(Fraction(1, 2)) == 1
    assert q3.ball_exponent(9) == -2


def test_serialization_round_trip():
    assert format_scalar(Fraction(-3, 4)) == "-3/4"
    assert format_scalar(5) == "5"
    assert parse_scalar("-3/4") == Fraction(-3, 4)
    with pytest.raises(TypeError):
        parse_scalar(True)
    assert magnitude_to_json(Fraction(1, 9), Qp(3)) == {"p": 3, "exponent": 2}
    assert magnitude_to_json(Fraction(0), Qp(3)) == {"p": 3, "exponent": None}
    assert magnitude_to_json(Fraction(1, 2)) == "1/2"
