"""Exception hierarchy shared by all curvelab modules."""


class CurveLabError(Exception):
    """Base class for every error raised by curvelab."""


class ContextMismatchError(CurveLabError, ValueError):
    """Two values from different valued fields were combined."""


class PreconditionError(CurveLabError, ValueError):
    """An operation was called outside its documented precondition."""


class DomainError(CurveLabError, ValueError):
    """A point or subdomain lies outside a curve's domain."""


class CoincidentPointsError(CurveLabError, ValueError):
    """A difference quotient needs distinct points but got repeated ones."""


class UnsupportedGaugeError(CurveLabError, TypeError):
    """The requested construction is not available for this gauge rule."""


class SpecError(CurveLabError, ValueError):
    """A gluing spec violates its invariants."""


class ConfigError(CurveLabError, ValueError):
    """A JSON config could not be parsed or failed schema validation."""
