"""curvelab: difference quotients over valued fields, gauges and calibrations,
the product rule for difference quotients, and gluing of curve pieces in the
ultrametric and real settings."""

from .errors import (CoincidentPointsError, ConfigError, ContextMismatchError, CurveLabError, DomainError,
                     PreconditionError, SpecError, UnsupportedGaugeError)
from .scalar import QQ, FieldContext, Qp, Scalar, abs_value, in_closed_ball, ultrametric_sum_law

__version__ = "0.1.0"

__all__ = [
    "QQ", "Qp", "FieldContext", "Scalar", "abs_value", "in_closed_ball", "ultrametric_sum_law",
    "CurveLabError", "ContextMismatchError", "PreconditionError", "DomainError", "CoincidentPointsError",
    "UnsupportedGaugeError", "SpecError", "ConfigError",
]
