"""Exact arithmetic in valued fields.

Two concrete fields are supported: the rationals under the ordinary
absolute value (``QQ``) and the rationals under a p-adic absolute value
(``Qp(p)``).  Values are plain :class:`fractions.Fraction` objects; the
archimedean field additionally accepts binary floats for the real-variable
constructions, where exactness is not achievable anyway.

Magnitudes (absolute values, gauge values) are either ``Fraction`` or
``float``.  p-adic absolute values are always exact integer powers of p.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import ContextMismatchError, PreconditionError

Magnitude = Union[Fraction, float]
Number = Union[Fraction, float]

ARCHIMEDEAN = "archimedean"
PADIC = "padic"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class FieldContext:
    """A valued field: ``kind`` is ``"archimedean"`` or ``"padic"``."""

    kind: str
    prime: int | None = None

    def __post_init__(self):
        if self.kind == PADIC:
            if self.prime is None or not is_prime(self.prime):
                raise ValueError(f"p-adic context needs a prime, got {self.prime!r}")
        elif self.kind == ARCHIMEDEAN:
            if self.prime is not None:
                raise ValueError("archimedean context takes no prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_ultrametric(self) -> bool:
        return self.kind == PADIC

    def __repr__(self):
        return "QQ" if self.kind == ARCHIMEDEAN else f"Qp({self.prime})"

    def coerce(self, x) -> Number:
        """Return ``x`` as a raw field value (Fraction, or float when allowed)."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise ContextMismatchError(f"{x.field!r} value used in {self!r}")
            return x.value
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, Rational)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        if isinstance(x, float):
            if self.kind == PADIC:
                raise TypeError("floats have no p-adic meaning; use Fraction")
            return x
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def valuation(self, x) -> int | None:
        """p-adic valuation of ``x``; ``None`` stands for +infinity (x = 0)."""
        if self.kind != PADIC:
            raise PreconditionError("valuation is only defined in a p-adic context")
        x = self.coerce(x)
        if x == 0:
            return None
        p = self.prime
        return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)

    def abs(self, x) -> Magnitude:
        x = self.coerce(x)
        if self.kind == ARCHIMEDEAN:
            return abs(x)
        v = self.valuation(x)
        if v is None:
            return Fraction(0)
        return Fraction(self.prime) ** (-v)

    def ball_exponent(self, radius: Magnitude) -> int:
        """Smallest e with p**(-e) <= radius.

        The closed p-adic ball of radius ``radius`` equals the one of
        radius ``p**(-e)``, since absolute values only take those values.
        """
        if self.kind != PADIC:
            raise PreconditionError("ball exponents are p-adic only")
        if radius <= 0:
            raise PreconditionError("radius must be positive")
        p = Fraction(self.prime)
        e = -math.floor(math.log(float(radius), self.prime)) - 1
        while p ** (-e) > radius:
            e += 1
        while p ** (-(e - 1)) <= radius:
            e -= 1
        return e


QQ = FieldContext(ARCHIMEDEAN)


def Qp(p: int) -> FieldContext:
    return FieldContext(PADIC, p)


@dataclass(frozen=True)
class Scalar:
    """An element of a valued field.  Arithmetic never mixes fields."""

    value: Number
    field: FieldContext = QQ

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _other(self, other) -> Number:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ContextMismatchError(f"cannot combine {self.field!r} and {other.field!r}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.value + self._other(other), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.value - self._other(other), self.field)

    def __rsub__(self, other):
        return Scalar(self._other(other) - self.value, self.field)

    def __mul__(self, other):
        return Scalar(self.value * self._other(other), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.value / self._other(other), self.field)

    def __rtruediv__(self, other):
        return Scalar(self._other(other) / self.value, self.field)

    def __neg__(self):
        return Scalar(-self.value, self.field)

    def __pow__(self, n: int):
        return Scalar(self.value**n, self.field)

    def __abs__(self) -> Magnitude:
        return self.field.abs(self.value)

    def __str__(self):
        return format_scalar(self.value)


def abs_value(x: Scalar) -> Magnitude:
    """Absolute value of ``x`` in its own field; exact for rational input."""
    return x.field.abs(x.value)


def ultrametric_sum_law(x: Scalar, y: Scalar) -> Magnitude:
    """Return ``|x + y|`` after confirming it equals ``|x|`` when ``|y| < |x|``."""
    field = x.field
    if y.field != field:
        raise ContextMismatchError(f"cannot combine {field!r} and {y.field!r}")
    if not field.is_ultrametric:
        raise PreconditionError("the strict ultrametric law needs a p-adic context")
    ax, ay = field.abs(x.value), field.abs(y.value)
    if not ay < ax:
        raise PreconditionError(f"need |y| < |x|, got |y| = {ay}, |x| = {ax}")
    s = field.abs(x.value + y.value)
    if s != ax:
        raise ArithmeticError(f"ultrametric law broken: |x+y| = {s} but |x| = {ax}")
    return s


def in_closed_ball(x: Scalar, center: Scalar, radius: Magnitude) -> bool:
    if radius <= 0:
        raise PreconditionError("radius must be positive")
    field = x.field
    return field.abs(x.value - field.coerce(center)) <= radius


# -- serialization -----------------------------------------------------------


def format_scalar(x) -> str:
    """Render a value as ``"num/den"`` (or ``"n"``); floats use ``repr``."""
    if isinstance(x, Scalar):
        x = x.value
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(s) -> Fraction:
    if isinstance(s, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(s, (int, str, Fraction)):
        return Fraction(s)
    raise TypeError(f"expected a rational string or int, got {s!r}")


def magnitude_to_json(m: Magnitude, field: FieldContext | None = None):
    """p-adic magnitudes become ``{"p": p, "exponent": v}`` with ``m = p**-v``."""
    if field is not None and field.is_ultrametric and isinstance(m, Fraction):
        if m == 0:
            return {"p": field.prime, "exponent": None}
        v = -field.valuation(m)
        if Fraction(field.prime) ** (-v) == m:
            return {"p": field.prime, "exponent": v}
    if isinstance(m, float):
        return m if math.isfinite(m) else str(m)
    return format_scalar(m)
