"""Gauges, Minkowski functionals and calibrations.

A gauge is a homogeneous map ``q: E -> [0, inf[`` whose sublevel sets
are 0-neighbourhoods.  Here ``E`` is ``K^d`` (or a finitely supported
piece of ``l^r(K)``), modelled by :class:`Vector`.  A calibration is a
sequence ``q_0, q_1, ...`` of gauges obeying the fake triangle inequality
``q_n(x+y) <= q_{n+1}(x) + q_{n+1}(y)``; a strong calibration uses ``max``
in place of the sum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ContextMismatchError, PreconditionError, UnsupportedGaugeError
from .report import FAIL, PASS, CheckResult, leq
from .scalar import QQ, FieldContext, Magnitude, format_scalar, parse_scalar

ORDINARY = "ordinary"
STRONG = "strong"


@dataclass(frozen=True)
class Vector:
    coords: tuple
    field: FieldContext = QQ

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.field.coerce(c) for c in self.coords))

    @classmethod
    def of(cls, values, field: FieldContext = QQ) -> Vector:
        return cls(tuple(values), field)

    @classmethod
    def zero(cls, dim: int, field: FieldContext = QQ) -> Vector:
        return cls((Fraction(0),) * dim, field)

    def __len__(self):
        return len(self.coords)

    def _check(self, other: Vector) -> None:
        if other.field != self.field:
            raise ContextMismatchError(f"cannot combine {self.field!r} and {other.field!r} vectors")
        if len(other) != len(self):
            raise ValueError(f"dimension mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.field)

    def __sub__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.field)

    def __neg__(self) -> Vector:
        return Vector(tuple(-a for a in self.coords), self.field)

    def scale(self, t) -> Vector:
        t = self.field.coerce(t)
        return Vector(tuple(t * a for a in self.coords), self.field)

    def __rmul__(self, t) -> Vector:
        return self.scale(t)

    def __str__(self):
        return "(" + ", ".join(format_scalar(c) for c in self.coords) + ")"


# -- gauges ------------------------------------------------------------------


class Gauge:
    """Base class.  Subclasses implement :meth:`evaluate` and :meth:`bound`."""

    field: FieldContext | None = None

    def __call__(self, x: Vector) -> Magnitude:
        if self.field is not None and x.field != self.field:
            raise ContextMismatchError(f"gauge on {self.field!r} applied to a {x.field!r} vector")
        return self.evaluate(x.coords, x.field)

    def evaluate(self, coords: tuple, field: FieldContext) -> Magnitude:
        raise NotImplementedError

    def bound(self, terms, field: FieldContext) -> Magnitude:
        """Upper bound for ``q(sum_m h_m a_m)`` given ``|h_m| <= w_m``.

        ``terms`` is a list of ``(a_m coords, w_m)`` pairs.  Only the
        gauge's own subadditivity law is used, so the bound is sound.
        """
        raise UnsupportedGaugeError(f"{type(self).__name__} has no coefficient bound")

    def __rmul__(self, factor) -> ScaledGauge:
        return ScaledGauge(self, factor)

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class AbsGauge(Gauge):
    """The absolute value of K, viewed as a gauge on one-dimensional vectors."""

    field: FieldContext | None = None

    def evaluate(self, coords, field):
        if len(coords) != 1:
            raise ValueError(f"abs gauge needs a 1-dimensional vector, got dimension {len(coords)}")
        return field.abs(coords[0])

    def bound(self, terms, field):
        vals = [field.abs(a[0]) * w for a, w in terms]
        if not vals:
            return Fraction(0)
        return max(vals) if field.is_ultrametric else sum(vals)

    def to_json(self):
        return {"rule": "abs"}


@dataclass(frozen=True)
class PNormGauge(Gauge):
    """``||x||_r = (sum |x_i|^r)^(1/r)`` for ``0 < r <= 1`` (an r-norm)."""

    r: Fraction = Fraction(1)
    field: FieldContext | None = None

    def __post_init__(self):
        r = parse_scalar(self.r) if not isinstance(self.r, float) else Fraction(self.r)
        if not 0 < r <= 1:
            raise PreconditionError(f"p_norm exponent must lie in (0, 1], got {r}")
        object.__setattr__(self, "r", r)

    def _combine(self, mags) -> Magnitude:
        if self.r == 1:
            return sum(mags, Fraction(0))
        r = float(self.r)
        return math.fsum(float(m) ** r for m in mags) ** (1.0 / r)

    def evaluate(self, coords, field):
        return self._combine(field.abs(c) for c in coords)

    def bound(self, terms, field):
        if not terms:
            return Fraction(0)
        if field.is_ultrametric:
            dim = len(terms[0][0])
            per_coord = [max(field.abs(a[i]) * w for a, w in terms) for i in range(dim)]
            return self._combine(per_coord)
        return self._combine(w * self.evaluate(a, field) for a, w in terms)

    def to_json(self):
        return {"rule": "p_norm", "r": format_scalar(self.r)}


@dataclass(frozen=True)
class ScaledGauge(Gauge):
    base: Gauge
    factor: Magnitude = Fraction(1)

    def __post_init__(self):
        if isinstance(self.factor, int):
            object.__setattr__(self, "factor", Fraction(self.factor))
        if self.factor < 0:
            raise PreconditionError("gauge scale factor must be nonnegative")
        object.__setattr__(self, "field", self.base.field)

    def evaluate(self, coords, field):
        return self.factor * self.base.evaluate(coords, field)

    def bound(self, terms, field):
        return self.factor * self.base.bound(terms, field)

    def to_json(self):
        f = self.factor
        return {"rule": "scaled", "factor": f if isinstance(f, float) else format_scalar(f),
                "base": self.base.to_json()}


@dataclass(frozen=True)
class SumGauge(Gauge):
    parts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise PreconditionError("sum gauge needs at least one part")

    def evaluate(self, coords, field):
        return sum((q.evaluate(coords, field) for q in self.parts), Fraction(0))

    def bound(self, terms, field):
        return sum((q.bound(terms, field) for q in self.parts), Fraction(0))

    def to_json(self):
        return {"rule": "sum", "parts": [q.to_json() for q in self.parts]}


def eval_gauge(q: Gauge, x: Vector) -> Magnitude:
    return q(x)


# -- balls and Minkowski functionals ----------------------------------------


@dataclass(frozen=True)
class BallDescriptor:
    """The 0-neighbourhood ``{x : q(x) < radius}`` (or ``<=`` when closed)."""

    gauge: Gauge
    radius: Magnitude = Fraction(1)
    openness: str = "open"

    def __post_init__(self):
        if self.radius <= 0:
            raise PreconditionError("ball radius must be positive")
        if self.openness not in ("open", "closed"):
            raise ValueError(f"openness must be 'open' or 'closed', got {self.openness!r}")

    def contains(self, x: Vector) -> bool:
        v = self.gauge(x)
        return v < self.radius if self.openness == "open" else v <= self.radius


def default_candidates(field: FieldContext) -> list:
    """A finite stand-in for ``K^x`` when approximating a Minkowski functional."""
    if field.is_ultrametric:
        p = Fraction(field.prime)
        return [p**j for j in range(-40, 41)]
    # mantissas 16/16 .. 31/16 give consecutive ratios <= 17/16
    return [Fraction(m, 16) * Fraction(2) ** e for e in range(-30, 31) for m in range(16, 32)]


def minkowski(U: BallDescriptor, x: Vector, candidates: Sequence) -> Magnitude:
    """``min |t|`` over candidates t with ``x in tU``; ``inf`` if none works.

    This is an upper approximation of the Minkowski functional restricted
    to the candidate set.
    """
    if not candidates:
        raise PreconditionError("minkowski needs a nonempty candidate list")
    field = x.field
    best = math.inf
    for t in candidates:
        t = field.coerce(t)
        if t == 0:
            raise PreconditionError("candidates must be nonzero")
        size = field.abs(t)
        if size >= best:
            continue
        if U.contains(Vector(tuple(c / t for c in x.coords), field)):
            best = size
    return best


def check_sandwich(q: Gauge, U: BallDescriptor, samples: Sequence[Vector], candidates=None) -> CheckResult:
    """Check ``q(x) <= mu_U(x)`` on samples; the caller asserts ``U`` lies in the q-unit ball."""
    violations = []
    for x in samples:
        cands = candidates if candidates is not None else default_candidates(x.field)
        qx, mu = q(x), minkowski(U, x, cands)
        if not leq(qx, mu):
            violations.append({"x": x.coords, "q": qx, "mu": mu})
    return CheckResult(
        "gauges.sandwich", "q(x) <= mu_U(x) whenever U is inside B_1^q(0)",
        FAIL if violations else PASS,
        {"samples": len(samples), "violations": violations[:10], "violation_count": len(violations)},
    )


def triangle_companion(q: Gauge) -> Gauge:
    """A gauge ``p`` with ``q(x+y) <= max(p(x), p(y))``.

    For an r-norm ``p = 2^(1/r) q``; the p-adic absolute value is already
    ultrametric, so ``p = q`` there.
    """
    if isinstance(q, ScaledGauge):
        return ScaledGauge(triangle_companion(q.base), q.factor)
    if isinstance(q, PNormGauge):
        return ScaledGauge(q, pow2(1 / q.r))
    if isinstance(q, AbsGauge):
        if q.field is not None and q.field.is_ultrametric:
            return q
        # |x+y| <= |x| + |y| <= 2 max(|x|, |y|), valid in any valued field
        return ScaledGauge(q, Fraction(2))
    raise UnsupportedGaugeError(f"no triangle companion for {type(q).__name__}")


def pow2(e: Fraction) -> Magnitude:
    """``2**e``, exact when ``e`` is an integer."""
    e = Fraction(e)
    if e.denominator == 1:
        return Fraction(2) ** e.numerator
    return 2.0 ** float(e)


# -- calibrations ------------------------------------------------------------


class Calibration:
    """A sequence of gauges indexed by ``n = 0, 1, 2, ...``."""

    kind: str = ORDINARY

    def gauge(self, n: int) -> Gauge:
        raise NotImplementedError

    def __getitem__(self, n: int) -> Gauge:
        if n < 0:
            raise IndexError("calibration indices start at 0")
        return self.gauge(n)

    def shifted(self, m: int, scale: Magnitude = Fraction(1)) -> ShiftedCalibration:
        """The calibration ``n -> scale * q_{n+m}``."""
        return ShiftedCalibration(self, m, scale)

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantCalibration(Calibration):
    """``q_n = q`` for every n; a calibration whenever q is a seminorm."""

    base: Gauge
    kind: str = ORDINARY

    def gauge(self, n):
        return self.base

    def to_json(self):
        return {"base": self.base.to_json(), "kind": self.kind, "factor_law": "constant"}


@dataclass(frozen=True)
class PowerCalibration(Calibration):
    """``q_n = 2^(n/r) q`` for an r-seminorm q; always strong."""

    base: Gauge
    r: Fraction = Fraction(1)
    kind: str = STRONG

    def __post_init__(self):
        r = Fraction(self.r)
        if not 0 < r <= 1:
            raise PreconditionError(f"r must lie in (0, 1], got {r}")
        object.__setattr__(self, "r", r)

    def factor(self, n: int) -> Magnitude:
        return pow2(Fraction(n) / self.r)

    def gauge(self, n):
        return self.base if n == 0 else ScaledGauge(self.base, self.factor(n))

    def to_json(self):
        return {"base": self.base.to_json(), "kind": self.kind, "factor_law": "pow2_over_r",
                "r": format_scalar(self.r)}


@dataclass(frozen=True)
class ShiftedCalibration(Calibration):
    """``q_n = scale * inner_{n + n0}``."""

    inner: Calibration
    n0: int = 0
    scale: Magnitude = Fraction(1)

    @property
    def kind(self):
        return self.inner.kind

    def gauge(self, n):
        g = self.inner.gauge(n + self.n0)
        return g if self.scale == 1 else ScaledGauge(g, self.scale)

    def to_json(self):
        return {"factor_law": "shifted", "kind": self.kind, "inner": self.inner.to_json(),
                "n0": self.n0, "scale": format_scalar(self.scale)}


def calibration_from_rseminorm(q: Gauge, r) -> PowerCalibration:
    """The strong calibration ``n -> 2^(n/r) q``; q must be an r-seminorm."""
    r = Fraction(r)
    if not 0 < r <= 1:
        raise PreconditionError(f"r must lie in (0, 1], got {r}")
    return PowerCalibration(q, r)


def check_fake_triangle(c: Calibration, pairs: Sequence, n_max: int) -> CheckResult:
    """Check the declared fake triangle (or ultrametric) law and monotonicity."""
    if not pairs:
        raise PreconditionError("check_fake_triangle needs at least one pair")
    strong = c.kind == STRONG
    violations = []
    checked = 0
    for n in range(n_max + 1):
        qn, qn1 = c[n], c[n + 1]
        for x, y in pairs:
            lhs = qn(x + y)
            ax, ay = qn1(x), qn1(y)
            rhs = max(ax, ay) if strong else ax + ay
            checked += 1
            if not leq(lhs, rhs):
                violations.append({"law": "triangle", "n": n, "x": x.coords, "y": y.coords,
                                   "lhs": lhs, "rhs": rhs})
            for v, big in ((x, ax), (y, ay)):
                if not leq(qn(v), big):
                    violations.append({"law": "monotone", "n": n, "x": v.coords,
                                       "q_n": qn(v), "q_n+1": big})
    law = "max{q_{n+1}(x), q_{n+1}(y)}" if strong else "q_{n+1}(x) + q_{n+1}(y)"
    return CheckResult(
        "gauges.fake_triangle." + c.kind, f"q_n(x+y) <= {law}; q_n <= q_{{n+1}}",
        FAIL if violations else PASS,
        {"pairs": len(pairs), "n_max": n_max, "checked": checked,
         "violations": violations[:10], "violation_count": len(violations)},
    )


def partial_sum_bound(terms: Sequence[Vector], c: Calibration, m: int, n: int) -> CheckResult:
    """Check ``q_0(x_m + ... + x_n) <= sum_k q_{k-m+1}(x_k) <= sum_k q_k(x_k)``.

    Indices are 1-based, as for the terms of a series.
    """
    if not 1 <= m <= n <= len(terms):
        raise PreconditionError(f"need 1 <= m <= n <= {len(terms)}, got m={m}, n={n}")
    chunk = terms[m - 1:n]
    total = chunk[0]
    for x in chunk[1:]:
        total = total + x
    left = c[0](total)
    if m == n:
        middle = c[0](chunk[0])
    else:
        middle = sum((c[k - m + 1](x) for k, x in zip(range(m, n + 1), chunk)), Fraction(0))
    right = sum((c[k](x) for k, x in zip(range(m, n + 1), chunk)), Fraction(0))
    ok = leq(left, middle) and leq(middle, right)
    return CheckResult(
        "gauges.partial_sum", "q_0(sum_{k=m}^n x_k) <= sum_{k=m}^n q_k(x_k)",
        PASS if ok else FAIL,
        {"m": m, "n": n, "left": left, "middle": middle, "right": right},
    )


def calibrated_series_norm(terms: Sequence[Vector], c: Calibration) -> Magnitude:
    """``sum_n q_n(x_n)`` over 1-based terms; finite for a finite term list."""
    return sum((c[k](x) for k, x in enumerate(terms, start=1)), Fraction(0))
