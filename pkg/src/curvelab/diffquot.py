"""Curves over valued fields and their higher difference quotients.

For a curve ``c`` the order-k difference quotient is defined recursively
on tuples with ``x_0 != x_k``::

    c<0>(x) = c(x)
    c<k>(x_0, ..., x_k) = (c<k-1>(x_k, x_1, ..., x_{k-1})
                           - c<k-1>(x_0, x_1, ..., x_{k-1})) / (x_k - x_0)

and extends continuously (and symmetrically) to all tuples.  Polynomial
curves evaluate coincident tuples through complete homogeneous symmetric
polynomials, so every tuple is admissible for them; every other rule
requires pairwise distinct points.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import CoincidentPointsError, ContextMismatchError, DomainError, PreconditionError
from .gauges import Gauge, UnsupportedGaugeError, Vector
from .scalar import QQ, FieldContext, Magnitude, Number

# Float tuples closer than this are routed to symbolic evaluation (or rejected).
MIN_REAL_GAP = 1e-6


# -- domains -----------------------------------------------------------------


@dataclass(frozen=True)
class PAdicBall:
    """The closed ball ``{x : |x - center|_p <= radius}``."""

    center: Fraction
    radius: Fraction
    field: FieldContext

    def __post_init__(self):
        if not self.field.is_ultrametric:
            raise PreconditionError("PAdicBall needs a p-adic field")
        if self.radius <= 0:
            raise PreconditionError("ball radius must be positive")
        object.__setattr__(self, "center", self.field.coerce(self.center))
        object.__setattr__(self, "radius", Fraction(self.radius))

    def contains(self, x) -> bool:
        return self.field.abs(x - self.center) <= self.radius

    @property
    def exponent(self) -> int:
        return self.field.ball_exponent(self.radius)

    @property
    def effective_radius(self) -> Fraction:
        """The largest absolute value ``p**-e`` not exceeding the radius."""
        return Fraction(self.field.prime) ** (-self.exponent)

    def shifted(self, t0) -> PAdicBall:
        return PAdicBall(self.center - t0, self.radius, self.field)

    def scaled(self, a) -> PAdicBall:
        """The preimage ``a^-1 U`` of the ball under ``t -> a t``."""
        return PAdicBall(self.center / a, self.radius / self.field.abs(a), self.field)

    def is_within(self, other) -> bool:
        if isinstance(other, WholeField):
            return other.field == self.field
        if isinstance(other, PAdicBall):
            return self.effective_radius <= other.radius and other.contains(self.center)
        return False

    def to_json(self):
        from .scalar import format_scalar
        return {"ball": {"center": format_scalar(self.center), "radius": format_scalar(self.radius)}}


@dataclass(frozen=True)
class RealInterval:
    """The closed interval ``[lo, hi]`` of the real line."""

    lo: Number
    hi: Number
    field: FieldContext = QQ

    def __post_init__(self):
        if self.field.is_ultrametric:
            raise PreconditionError("RealInterval needs the archimedean field")
        if not self.lo < self.hi:
            raise PreconditionError(f"need lo < hi, got [{self.lo}, {self.hi}]")

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def shifted(self, t0) -> RealInterval:
        return RealInterval(self.lo - t0, self.hi - t0, self.field)

    def scaled(self, a) -> RealInterval:
        lo, hi = self.lo / a, self.hi / a
        return RealInterval(min(lo, hi), max(lo, hi), self.field)

    def is_within(self, other) -> bool:
        if isinstance(other, WholeField):
            return other.field == self.field
        if isinstance(other, RealInterval):
            return other.lo <= self.lo and self.hi <= other.hi
        return False

    def to_json(self):
        from .scalar import format_scalar
        return {"interval": [format_scalar(self.lo), format_scalar(self.hi)]}


@dataclass(frozen=True)
class WholeField:
    field: FieldContext = QQ

    def contains(self, x) -> bool:
        return True

    def shifted(self, t0) -> WholeField:
        return self

    def scaled(self, a) -> WholeField:
        return self

    def is_within(self, other) -> bool:
        return isinstance(other, WholeField) and other.field == self.field

    def to_json(self):
        return {"whole": True}


# -- evaluation machinery ----------------------------------------------------


def _intern_key(x):
    # Fraction.__hash__ is slow; exact values key on their lowest-terms pair.
    # A float and an equal Fraction get separate ids, which the gap test catches.
    t = type(x)
    if t is Fraction:
        return (x.numerator, x.denominator)
    if t is int:
        return (x, 1)
    return x


class _Evaluator:
    """Memo tables for one evaluation (or one session).

    Points are interned to small integer ids on entry, so memo keys are
    tuples of ints and each scalar is hashed once.
    """

    def __init__(self, symmetric: bool = False):
        self.symmetric = symmetric
        self.pts: list = []
        self._ids: dict = {}
        self._floats: set = set()
        self._gaps: dict = {}
        self.values: dict = {}
        self.quotients: dict = {}
        self._pinned: dict = {}

    def intern(self, pts) -> tuple:
        out = []
        for x in pts:
            key = _intern_key(x)
            i = self._ids.get(key)
            if i is None:
                i = self._ids[key] = len(self.pts)
                self.pts.append(x)
                if isinstance(x, float):
                    self._floats.add(i)
            out.append(i)
        return tuple(out)

    def points(self, ids: tuple) -> tuple:
        return tuple(self.pts[i] for i in ids)

    def gap(self, i: int, j: int):
        d = self._gaps.get((i, j))
        if d is None:
            d = self._gaps[(i, j)] = self.pts[i] - self.pts[j]
        return d

    def separated(self, ids: tuple) -> bool:
        if len(set(ids)) != len(ids):
            return False
        if self._floats and not self._floats.isdisjoint(ids):
            s = sorted(self.pts[i] for i in ids)
            return all(b - a >= MIN_REAL_GAP for a, b in zip(s, s[1:]))
        return True

    def value(self, curve, x) -> tuple:
        return self.value_id(curve, self.intern((x,))[0])

    def value_id(self, curve, i: int) -> tuple:
        key = (id(curve), i)
        v = self.values.get(key)
        if v is None:
            self._pinned[id(curve)] = curve
            v = self.values[key] = curve.value(self.pts[i])
        return v

    def dq(self, curve, pts: tuple) -> tuple:
        return self.dq_ids(curve, self.intern(pts))

    def dq_ids(self, curve, ids: tuple) -> tuple:
        if len(ids) == 1:
            return self.value_id(curve, ids[0])
        key = (id(curve), tuple(sorted(ids)) if self.symmetric else ids)
        v = self.quotients.get(key)
        if v is None:
            self._pinned[id(curve)] = curve
            v = self.quotients[key] = curve._dq(ids, self)
        return v


class Session:
    """A cache of difference quotients shared across calls.

    By default entries are keyed on ``(curve identity, sorted tuple)``,
    which is valid because difference quotients are symmetric.  With
    ``ordered=True`` keys keep the tuple order, so nothing relies on
    symmetry; use that when symmetry itself is under test.  A session
    belongs to one caller; separate sessions may evaluate the same curve
    concurrently.
    """

    def __init__(self, ordered: bool = False):
        self._ev = _Evaluator(symmetric=not ordered)

    def __len__(self):
        return len(self._ev.quotients)


def _recursion(curve, ids: tuple, ev: _Evaluator) -> tuple:
    """One step of the defining recursion on interned ids; sub-tuples go back through ``ev``."""
    i0, ik = ids[0], ids[-1]
    if i0 == ik:
        raise CoincidentPointsError(f"x_0 = x_k = {ev.pts[i0]} in the recursion")
    hi = ev.dq_ids(curve, (ik,) + ids[1:-1])
    lo = ev.dq_ids(curve, ids[:-1])
    d = ev.gap(ik, i0)
    if len(hi) == 1:
        return ((hi[0] - lo[0]) / d,)
    return tuple((a - b) / d for a, b in zip(hi, lo))


def _zeros(dim: int) -> tuple:
    return (Fraction(0),) * dim


# -- curves ------------------------------------------------------------------


class Curve:
    """Base class of all curve rules.

    Subclasses provide ``domain``, ``dim`` and :meth:`value`; the
    difference quotient falls back to the defining recursion.
    """

    domain = None
    dim: int = 1

    @property
    def field(self) -> FieldContext:
        return self.domain.field

    def value(self, x) -> tuple:
        raise NotImplementedError

    def __call__(self, x) -> Vector:
        x = self.field.coerce(x)
        if not self.domain.contains(x):
            raise DomainError(f"{x} is outside the curve's domain")
        return Vector(self.value(x), self.field)

    def as_polynomial(self) -> Polynomial | None:
        return None

    def _dq(self, ids: tuple, ev: _Evaluator) -> tuple:
        if ev.separated(ids):
            return _recursion(self, ids, ev)
        return self._coincident_dq(ids, ev)

    def _coincident_dq(self, ids: tuple, ev: _Evaluator) -> tuple:
        poly = self.as_polynomial()
        if poly is None:
            raise CoincidentPointsError(
                f"{type(self).__name__} needs pairwise distinct points, got {ev.points(ids)}")
        return poly.symmetric_dq(ev.points(ids))

    def to_json(self) -> dict:
        raise NotImplementedError


def _horner(coeffs: tuple, x):
    acc = Fraction(0)
    for a in reversed(coeffs):
        acc = acc * x + a
    return acc


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) if coeffs else (Fraction(0),)


def complete_homogeneous(pts: Sequence, degree: int) -> list:
    """``[h_0(pts), ..., h_degree(pts)]`` for the complete homogeneous
    symmetric polynomials with unit coefficients."""
    h = [Fraction(1)] + [Fraction(0)] * degree
    for x in pts:
        # h_d(x_0..x_j) = h_d(x_0..x_{j-1}) + x_j h_{d-1}(x_0..x_j)
        for d in range(1, degree + 1):
            h[d] = h[d] + x * h[d - 1]
    return h


@dataclass(frozen=True, eq=False)
class Polynomial(Curve):
    """A vector-valued polynomial; ``coeffs[i][m]`` multiplies ``x**m`` in coordinate i."""

    coeffs: tuple
    domain: object = None

    def __post_init__(self):
        if self.domain is None:
            object.__setattr__(self, "domain", WholeField(QQ))
        f = self.domain.field
        rows = tuple(_trim(tuple(f.coerce(a) for a in row)) for row in self.coeffs)
        if not rows:
            raise PreconditionError("polynomial curve needs at least one coordinate")
        object.__setattr__(self, "coeffs", rows)

    @classmethod
    def scalar(cls, coeffs: Sequence, domain=None) -> Polynomial:
        return cls((tuple(coeffs),), domain)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        return max(len(row) - 1 for row in self.coeffs)

    def value(self, x) -> tuple:
        return tuple(_horner(row, x) for row in self.coeffs)

    def as_polynomial(self):
        return self

    def coefficient_vector(self, m: int) -> tuple:
        return tuple(row[m] if m < len(row) else Fraction(0) for row in self.coeffs)

    def derivative(self) -> Polynomial:
        rows = tuple(tuple(m * row[m] for m in range(1, len(row))) or (0,) for row in self.coeffs)
        return Polynomial(rows, self.domain)

    def shifted(self, t0) -> Polynomial:
        """``x -> p(x + t0)`` on the domain ``U - t0``."""
        rows = []
        for row in self.coeffs:
            n = len(row)
            out = [Fraction(0)] * n
            for j in range(n):
                # b_j = sum_{m >= j} a_m C(m, j) t0^(m-j)
                out[j] = sum((row[m] * math.comb(m, j) * t0 ** (m - j) for m in range(j, n)),
                             Fraction(0))
            rows.append(tuple(out))
        return Polynomial(tuple(rows), self.domain.shifted(t0))

    def rescaled(self, a) -> Polynomial:
        """``x -> p(a x)`` on the domain ``a^-1 U``."""
        rows = tuple(tuple(c * a**m for m, c in enumerate(row)) for row in self.coeffs)
        return Polynomial(rows, self.domain.scaled(a))

    def times(self, other: Polynomial) -> Polynomial:
        """Pointwise product with a scalar-valued polynomial ``other``."""
        (s,) = other.coeffs
        rows = []
        for row in self.coeffs:
            out = [Fraction(0)] * (len(row) + len(s) - 1)
            for i, a in enumerate(s):
                for j, b in enumerate(row):
                    out[i + j] += a * b
            rows.append(tuple(out))
        return Polynomial(tuple(rows), self.domain)

    def plus(self, other: Polynomial) -> Polynomial:
        rows = []
        for r1, r2 in zip(self.coeffs, other.coeffs):
            n = max(len(r1), len(r2))
            rows.append(tuple((r1[m] if m < len(r1) else 0) + (r2[m] if m < len(r2) else 0)
                              for m in range(n)))
        return Polynomial(tuple(rows), self.domain)

    def with_domain(self, domain) -> Polynomial:
        return Polynomial(self.coeffs, domain)

    def symmetric_dq(self, pts: tuple) -> tuple:
        """``sum_m a_m h_{m-k}(pts)``; valid for any tuple, repeated points included."""
        k = len(pts) - 1
        top = self.degree - k
        if top < 0:
            return _zeros(self.dim)
        h = complete_homogeneous(pts, top)
        return tuple(sum((row[m] * h[m - k] for m in range(k, len(row))), Fraction(0))
                     for row in self.coeffs)

    def to_json(self):
        from .scalar import format_scalar
        rows = [[format_scalar(a) for a in row] for row in self.coeffs]
        d = {"poly": rows[0] if self.dim == 1 else rows}
        if not isinstance(self.domain, WholeField):
            d["domain"] = self.domain.to_json()
        return d


@dataclass(frozen=True, eq=False)
class Translate(Curve):
    """``eta(t) = inner(t + t0)`` on ``U - t0``."""

    inner: Curve
    t0: Number

    @cached_property
    def domain(self):
        return self.inner.domain.shifted(self.t0)

    @property
    def dim(self):
        return self.inner.dim

    def value(self, x):
        return self.inner.value(x + self.t0)

    @cached_property
    def _poly(self):
        p = self.inner.as_polynomial()
        return None if p is None else p.shifted(self.t0)

    def as_polynomial(self):
        return self._poly

    def _coincident_dq(self, ids, ev):
        return ev.dq(self.inner, tuple(x + self.t0 for x in ev.points(ids)))

    def to_json(self):
        from .scalar import format_scalar
        return {"translate": self.inner.to_json(), "t0": format_scalar(self.t0)}


@dataclass(frozen=True, eq=False)
class Scale(Curve):
    """``eta(t) = inner(a t)`` on ``a^-1 U``."""

    inner: Curve
    a: Number

    def __post_init__(self):
        if self.a == 0:
            raise PreconditionError("scale factor must be nonzero")

    @cached_property
    def domain(self):
        return self.inner.domain.scaled(self.a)

    @property
    def dim(self):
        return self.inner.dim

    def value(self, x):
        return self.inner.value(self.a * x)

    @cached_property
    def _poly(self):
        p = self.inner.as_polynomial()
        return None if p is None else p.rescaled(self.a)

    def as_polynomial(self):
        return self._poly

    def _coincident_dq(self, ids, ev):
        k = len(ids) - 1
        inner = ev.dq(self.inner, tuple(self.a * x for x in ev.points(ids)))
        f = self.a**k
        return tuple(f * v for v in inner)

    def to_json(self):
        from .scalar import format_scalar
        return {"scale": self.inner.to_json(), "a": format_scalar(self.a)}


@dataclass(frozen=True, eq=False)
class Restrict(Curve):
    inner: Curve
    domain: object

    def __post_init__(self):
        if not self.domain.is_within(self.inner.domain):
            raise DomainError("restriction domain is not contained in the curve's domain")

    @property
    def dim(self):
        return self.inner.dim

    def value(self, x):
        return self.inner.value(x)

    def as_polynomial(self):
        p = self.inner.as_polynomial()
        return None if p is None else p.with_domain(self.domain)

    def _coincident_dq(self, ids, ev):
        return ev.dq_ids(self.inner, ids)

    def to_json(self):
        return {"restrict": self.inner.to_json(), "domain": self.domain.to_json()}


@dataclass(frozen=True, eq=False)
class ExtendByZero(Curve):
    """The inner curve on its domain, zero on the rest of the field.

    Difference quotients split three ways: all points inside (use the
    inner curve), all outside (zero), or mixed, where an inside point is
    moved to the front and an outside point to the back so one recursion
    step divides by a nonzero gap.
    """

    inner: Curve

    @cached_property
    def domain(self):
        return WholeField(self.inner.field)

    @property
    def dim(self):
        return self.inner.dim

    def value(self, x):
        if self.inner.domain.contains(x):
            return self.inner.value(x)
        return _zeros(self.dim)

    def _dq(self, ids, ev):
        inside = [self.inner.domain.contains(x) for x in ev.points(ids)]
        if all(inside):
            return ev.dq_ids(self.inner, ids)
        if not any(inside):
            return _zeros(self.dim)
        i = inside.index(True)
        j = inside.index(False)
        rest = tuple(x for n, x in enumerate(ids) if n not in (i, j))
        return _recursion(self, (ids[i],) + rest + (ids[j],), ev)

    def to_json(self):
        return {"extend_by_zero": self.inner.to_json()}


@dataclass(frozen=True, eq=False)
class Product(Curve):
    """Pointwise product of a scalar curve with a (vector) curve."""

    scalar_curve: Curve
    vector_curve: Curve

    def __post_init__(self):
        if self.scalar_curve.dim != 1:
            raise PreconditionError("first factor of a product must be scalar-valued")
        if self.scalar_curve.field != self.vector_curve.field:
            raise ContextMismatchError("product factors live over different fields")

    @cached_property
    def domain(self):
        d1, d2 = self.scalar_curve.domain, self.vector_curve.domain
        if d1.is_within(d2):
            return d1
        if d2.is_within(d1):
            return d2
        raise DomainError("product factors need nested domains")

    @property
    def dim(self):
        return self.vector_curve.dim

    def value(self, x):
        (s,) = self.scalar_curve.value(x)
        return tuple(s * v for v in self.vector_curve.value(x))

    @cached_property
    def _poly(self):
        p, q = self.scalar_curve.as_polynomial(), self.vector_curve.as_polynomial()
        if p is None or q is None:
            return None
        return q.times(p).with_domain(self.domain)

    def as_polynomial(self):
        return self._poly

    def to_json(self):
        return {"product": [self.scalar_curve.to_json(), self.vector_curve.to_json()]}


@dataclass(frozen=True, eq=False)
class Sum(Curve):
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise PreconditionError("sum curve needs at least one part")
        if len({c.dim for c in self.parts}) != 1:
            raise PreconditionError("sum parts differ in dimension")

    @cached_property
    def domain(self):
        d = self.parts[0].domain
        for c in self.parts[1:]:
            if d.is_within(c.domain):
                continue
            if c.domain.is_within(d):
                d = c.domain
            else:
                raise DomainError("sum parts need nested domains")
        return d

    @property
    def dim(self):
        return self.parts[0].dim

    def value(self, x):
        out = list(_zeros(self.dim))
        for c in self.parts:
            for i, v in enumerate(c.value(x)):
                out[i] += v
        return tuple(out)

    @cached_property
    def _poly(self):
        polys = [c.as_polynomial() for c in self.parts]
        if any(p is None for p in polys):
            return None
        total = polys[0]
        for p in polys[1:]:
            total = total.plus(p)
        return total.with_domain(self.domain)

    def as_polynomial(self):
        return self._poly

    def _coincident_dq(self, ids, ev):
        out = list(_zeros(self.dim))
        for c in self.parts:
            for i, v in enumerate(ev.dq_ids(c, ids)):
                out[i] += v
        return tuple(out)

    def to_json(self):
        return {"sum": [c.to_json() for c in self.parts]}


def translate(c: Curve, t0) -> Curve:
    return Translate(c, c.field.coerce(t0))


def scale(c: Curve, a) -> Curve:
    return Scale(c, c.field.coerce(a))


def restrict(c: Curve, V) -> Curve:
    return Restrict(c, V)


def extend_by_zero(c: Curve) -> Curve:
    return ExtendByZero(c)


# -- public operations -------------------------------------------------------


def _prepare(c: Curve, k: int, t: Sequence) -> tuple:
    if k < 0:
        raise PreconditionError("order must be nonnegative")
    if len(t) != k + 1:
        raise PreconditionError(f"order {k} needs {k + 1} points, got {len(t)}")
    field = c.field
    pts = tuple(field.coerce(x) for x in t)
    for x in pts:
        if not c.domain.contains(x):
            raise DomainError(f"point {x} is outside the curve's domain")
    return pts


def dq_raw(c: Curve, pts: tuple, session: Session | None = None) -> tuple:
    """Difference quotient on already-coerced points; returns raw coordinates."""
    ev = session._ev if session is not None else _Evaluator()
    return ev.dq(c, pts)


def diff_quot(c: Curve, k: int, t: Sequence, session: Session | None = None) -> Vector:
    """The order-k difference quotient of ``c`` at the tuple ``t``.

    Exact over exact scalars.  Without a session, memoization is keyed on
    ordered sub-tuples only, so symmetry is never assumed.
    """
    pts = _prepare(c, k, t)
    return Vector(dq_raw(c, pts, session), c.field)


def diff_quot_coincident(c: Curve, k: int, x) -> Vector:
    """``c^(k)(x) / k!`` by symbolic differentiation of the coefficients."""
    poly = c.as_polynomial()
    if poly is None:
        raise PreconditionError(f"{type(c).__name__} is not a polynomial rule")
    x = c.field.coerce(x)
    if not c.domain.contains(x):
        raise DomainError(f"point {x} is outside the curve's domain")
    d = poly
    for _ in range(k):
        d = d.derivative()
    f = math.factorial(k)
    return Vector(tuple(v / f for v in d.value(x)), c.field)


@dataclass(frozen=True)
class SupGaugeEstimate:
    """Bracket for ``sup ||c<k>(x)||_q`` over all tuples in the domain."""

    lower: Magnitude
    upper: Magnitude | None
    sample_count: int

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper * (1 + 1e-9):
            raise ArithmeticError(f"sampled lower {self.lower} exceeds certified upper {self.upper}")


def certified_upper(c: Curve, k: int, q: Gauge) -> Magnitude | None:
    """Coefficient bound for a polynomial on a p-adic ball, else ``None``.

    Re-centred at the ball centre, ``c<k> = sum_{m>=k} b_m h_{m-k}`` and the
    integer-coefficient ``h_{m-k}`` is bounded by ``R^(m-k)`` on the ball.
    """
    poly = c.as_polynomial()
    dom = c.domain
    if poly is None or not isinstance(dom, PAdicBall):
        return None
    centred = poly.shifted(dom.center)
    R = dom.effective_radius
    terms = [(centred.coefficient_vector(m), R ** (m - k)) for m in range(k, centred.degree + 1)]
    try:
        return q.bound(terms, c.field)
    except UnsupportedGaugeError:
        return None


def sample_tuples(sampler, domain, size: int) -> list:
    if hasattr(sampler, "tuples"):
        return sampler.tuples(domain, size)
    return [tuple(t) for t in sampler]


def sup_gauge(c: Curve, k: int, q: Gauge, sampler, session: Session | None = None) -> SupGaugeEstimate:
    """Sampled lower bound and, when available, certified upper bound."""
    tuples = sample_tuples(sampler, c.domain, k + 1)
    field = c.field
    lower = Fraction(0)
    ev = session._ev if session is not None else _Evaluator()
    for t in tuples:
        pts = tuple(field.coerce(x) for x in t)
        v = q.evaluate(ev.dq(c, pts), field)
        if v > lower:
            lower = v
    return SupGaugeEstimate(lower, certified_upper(c, k, q), len(tuples))


class SupGauge(Gauge):
    """The gauge ``c -> sup ||c<order>||_q`` on a space of curves.

    Evaluates to the certified upper bound when one exists, otherwise to
    the sampled lower bound.
    """

    def __init__(self, order: int, base: Gauge, sampler):
        self.order, self.base, self.sampler = order, base, sampler

    def __call__(self, c: Curve) -> Magnitude:
        est = sup_gauge(c, self.order, self.base, self.sampler)
        return est.upper if est.upper is not None else est.lower

    def to_json(self):
        return {"rule": "sup_gauge", "order": self.order, "base": self.base.to_json()}


def sub_tuples(t: tuple, size: int) -> list:
    """All order-preserving sub-tuples of ``t`` with ``size`` entries."""
    return list(combinations(t, size))
