"""Gluing curve pieces over an ultrametric field.

Piece n lives on the ball ``|t| <= |rho|^n`` and is moved to the ball of
the same radius around ``rho^(n-1)``.  These balls are pairwise disjoint,
so the glued curve is a finite sum of zero-extended translates and agrees
with piece n on ball n.  Only finitely many pieces are modelled; the tail
is the zero curve.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .diffquot import (Curve, ExtendByZero, PAdicBall, Polynomial, Translate, WholeField, _Evaluator,
                       _zeros, certified_upper, sample_tuples, sub_tuples)
from .errors import PreconditionError, SpecError
from .gauges import Calibration, ConstantCalibration, AbsGauge, Vector
from .report import FAIL, INCONCLUSIVE, PASS, CheckResult, leq, result, worst
from .samplers import PAdicGridSampler
from .scalar import FieldContext, format_scalar


@dataclass(frozen=True)
class HypothesisProbe:
    """Finite grids on which decay hypotheses are probed."""

    a_values: tuple = (Fraction(1), Fraction(2), Fraction(4))
    k_max: int = 2
    m_max: int = 1
    l_max: int = 2
    C: Fraction = Fraction(1)
    threshold: float = 1e-6

    def __post_init__(self):
        object.__setattr__(self, "a_values", tuple(Fraction(a) for a in self.a_values))
        object.__setattr__(self, "C", Fraction(self.C))
        if any(a <= 0 for a in self.a_values) or self.C <= 0 or self.threshold <= 0:
            raise SpecError("probe values must be positive")
        if min(self.k_max, self.m_max, self.l_max) < 0:
            raise SpecError("probe grid bounds must be nonnegative")

    def to_json(self):
        return {"a_values": [format_scalar(a) for a in self.a_values], "k_max": self.k_max,
                "m_max": self.m_max, "l_max": self.l_max, "C": format_scalar(self.C),
                "threshold": self.threshold}


@dataclass
class UltrametricGlueSpec:
    field: FieldContext
    rho: Fraction
    pieces: list
    calibration: Calibration = None
    probe: HypothesisProbe = field(default_factory=HypothesisProbe)

    def __post_init__(self):
        if not self.field.is_ultrametric:
            raise SpecError("ultrametric gluing needs a p-adic field")
        self.rho = self.field.coerce(self.rho)
        if self.rho == 0 or not self.field.abs(self.rho) < 1:
            raise SpecError(f"need 0 < |rho| < 1, got |{self.rho}| = {self.field.abs(self.rho)}")
        if self.calibration is None:
            self.calibration = ConstantCalibration(AbsGauge())
        for n, c in enumerate(self.pieces, start=1):
            dom = c.domain
            if not isinstance(dom, PAdicBall) or dom.field != self.field:
                raise SpecError(f"piece {n} must live on a ball of {self.field!r}")
            if dom.center != 0 or dom.effective_radius != self.radius(n):
                raise SpecError(f"piece {n} must live on |t| <= {self.radius(n)}, "
                                f"got centre {dom.center} radius {dom.radius}")
        if len({c.dim for c in self.pieces}) > 1:
            raise SpecError("pieces differ in dimension")

    @property
    def rho_abs(self) -> Fraction:
        return self.field.abs(self.rho)

    def radius(self, n: int) -> Fraction:
        return self.rho_abs**n

    def ball(self, n: int) -> PAdicBall:
        return PAdicBall(Fraction(0), self.radius(n), self.field)

    def center(self, n: int) -> Fraction:
        return self.rho ** (n - 1)

    @classmethod
    def from_polynomials(cls, field: FieldContext, rho, coeff_lists: Sequence, **kw):
        rho = field.coerce(rho)
        r = field.abs(rho)
        pieces = []
        for n, coeffs in enumerate(coeff_lists, start=1):
            rows = coeffs if coeffs and isinstance(coeffs[0], (list, tuple)) else [coeffs]
            pieces.append(Polynomial(tuple(tuple(row) for row in rows),
                                     PAdicBall(Fraction(0), r**n, field)))
        return cls(field, rho, pieces, **kw)


@dataclass(frozen=True, eq=False)
class GluedCurveUM(Curve):
    spec: UltrametricGlueSpec

    @property
    def domain(self):
        return WholeField(self.spec.field)

    @property
    def dim(self):
        return self.spec.pieces[0].dim if self.spec.pieces else 1

    @property
    def eta_pieces(self) -> list:
        return self._etas

    def __post_init__(self):
        etas = [ExtendByZero(Translate(c, -self.spec.center(n)))
                for n, c in enumerate(self.spec.pieces, start=1)]
        object.__setattr__(self, "_etas", etas)

    def value(self, x):
        n = locate(self, x)
        if n is None:
            return _zeros(self.dim)
        return self.spec.pieces[n - 1].value(x - self.spec.center(n))

    def _dq(self, ids, ev):
        # eta_n contributes nothing when no point lies in ball n
        hit = sorted({n for n in (locate(self, x) for x in ev.points(ids)) if n is not None})
        out = list(_zeros(self.dim))
        for n in hit:
            for i, v in enumerate(ev.dq_ids(self._etas[n - 1], ids)):
                out[i] += v
        return tuple(out)

    def to_json(self):
        return {"glued_um": True}


def build(spec: UltrametricGlueSpec) -> GluedCurveUM:
    return GluedCurveUM(spec)


def locate(g: GluedCurveUM, x) -> int | None:
    """The piece whose ball contains ``x``, shortlisted by ``|x|``."""
    spec = g.spec
    f = spec.field
    x = f.coerce(x)
    if x == 0:
        return None
    v, vr = f.valuation(x), f.valuation(spec.rho)
    if v < 0 or v % vr:
        return None
    n = v // vr + 1
    if n > len(spec.pieces):
        return None
    if f.abs(x - spec.center(n)) <= spec.radius(n):
        return n
    return None


def eval_glued(g: GluedCurveUM, x) -> Vector:
    return Vector(g.value(g.field.coerce(x)), g.field)


def extend_by_zero(c: Curve) -> ExtendByZero:
    dom = c.domain
    if not isinstance(dom, PAdicBall) or dom.center != 0:
        raise PreconditionError("extension by zero needs a closed p-adic ball about 0")
    return ExtendByZero(c)


# -- checks ------------------------------------------------------------------


def check_disjoint(spec: UltrametricGlueSpec) -> CheckResult:
    f = spec.field
    bad = []
    N = len(spec.pieces)
    for m in range(1, N + 1):
        for n in range(m + 1, N + 1):
            gap = f.abs(spec.center(m) - spec.center(n))
            if not gap > max(spec.radius(m), spec.radius(n)):
                bad.append((m, n, gap))
    return result("glue_um.disjoint", "|rho^(m-1) - rho^(n-1)| > max(|rho|^m, |rho|^n) for m != n",
                  not bad, pairs=N * (N - 1) // 2, violations=bad)


def check_identity(g: GluedCurveUM, n_samples: int = 100, seed: int = 0) -> CheckResult:
    """``g(rho^(n-1) + t) == piece_n(t)`` at sampled ``(n, t)``."""
    spec = g.spec
    rng = random.Random(f"glue-um-identity/{seed}")
    sampler = PAdicGridSampler(depth=3, seed=seed)
    pools = [sampler.points(spec.ball(n)) for n in range(1, len(spec.pieces) + 1)]
    bad, count = [], 0
    for _ in range(n_samples if pools else 0):
        n = rng.randrange(1, len(pools) + 1)
        t = rng.choice(pools[n - 1])
        count += 1
        got = g.value(spec.center(n) + t)
        want = spec.pieces[n - 1].value(t)
        if got != want:
            bad.append((n, t, got, want))
    return result("glue_um.identity", "g(rho^(n-1) + t) = g_n(t) for |t| <= |rho|^n",
                  not bad, samples=count, violations=bad[:10])


def off_support_points(spec: UltrametricGlueSpec, count: int, seed: int = 0) -> list:
    """Points outside every ball: zero, just outside each ball, and random rationals."""
    f = spec.field
    p = f.prime
    rng = random.Random(f"glue-um-off/{seed}")
    N = len(spec.pieces)
    pts = [Fraction(0)]
    while len(pts) < count:
        kind = rng.randrange(3)
        if kind == 0 and N:
            n = rng.randrange(1, N + 1)
            e = f.ball_exponent(spec.radius(n))
            unit = Fraction(rng.choice([u for u in range(1, 2 * p) if u % p]))
            x = spec.center(n) + unit * Fraction(p) ** (e - 1)
        elif kind == 1:
            x = Fraction(rng.randrange(-10**4, 10**4), rng.randrange(1, 100))
        else:
            unit = Fraction(rng.choice([u for u in range(1, 4 * p) if u % p]))
            x = unit * Fraction(p) ** rng.randrange(-4, 3 * max(N, 1))
        if all(f.abs(x - spec.center(n)) > spec.radius(n) for n in range(1, N + 1)):
            pts.append(x)
    return pts


def check_off_support(g: GluedCurveUM, n_samples: int = 100, seed: int = 0) -> CheckResult:
    pts = off_support_points(g.spec, n_samples, seed)
    zero = _zeros(g.dim)
    bad = [x for x in pts if g.value(x) != zero or locate(g, x) is not None]
    return result("glue_um.off_support", "g(x) = 0 outside every ball B(rho^(n-1), |rho|^n)",
                  not bad, samples=len(pts), violations=bad[:10])


def _inside_sups(c: Curve, cal: Calibration, j: int, k: int, tuples: list, ev) -> Fraction:
    """Sampled sup of ``q_{k-j}(c<j>)`` over in-domain ordered sub-tuples."""
    q = cal.gauge(k - j)
    best = Fraction(0)
    for t in tuples:
        inside = tuple(x for x in t if c.domain.contains(x))
        for s in sub_tuples(inside, j + 1):
            best = max(best, q.evaluate(ev.dq(c, s), c.field))
    return best


def check_resestim(c: Curve, k_max: int, cal: Calibration, sampler=None, strong: bool = False) -> list:
    """Extension-by-zero estimate for ``k = 0..k_max``.

    The left side is sampled over tuples mixing points inside and outside
    the ball; the right side uses certified coefficient bounds when the
    curve is polynomial and in-ball sub-tuple sups otherwise.  ``strong``
    drops the factor ``2^(k-j)``, as allowed for strong calibrations.
    """
    ball = c.domain
    if not isinstance(ball, PAdicBall) or ball.center != 0:
        raise PreconditionError("check_resestim needs a curve on a closed p-adic ball about 0")
    if sampler is None:
        sampler = PAdicGridSampler(depth=3, widen=1, n_tuples=500)
    eta = ExtendByZero(c)
    f = c.field
    r = ball.radius
    q0 = cal.gauge(0)
    out = []
    ev = _Evaluator(symmetric=True)
    for k in range(k_max + 1):
        tuples = [tuple(f.coerce(x) for x in t) for t in sample_tuples(sampler, ball, k + 1)]
        lhs = max((q0.evaluate(ev.dq(eta, t), f) for t in tuples), default=Fraction(0))
        terms = []
        for j in range(k + 1):
            s = certified_upper(c, j, cal.gauge(k - j))
            if s is None:
                s = _inside_sups(c, cal, j, k, tuples, ev)
            factor = (1 / r if strong else 2 / r) ** (k - j)
            terms.append(factor * s)
        rhs = max(terms)
        out.append(result(
            f"glue_um.resestim.k{k}",
            "||E(c)<k>||_{q_0} <= max_j (2/r)^(k-j) ||c<j>||_{q_(k-j)}",
            leq(lhs, rhs), k=k, lhs=lhs, rhs=rhs, terms=terms, samples=len(tuples),
            radius=r, strong=strong,
        ))
    return out


def decay_verdict(seq: Sequence, threshold) -> str:
    """Prefix verdict for a sequence that should tend to zero.

    Pass: the second half never increases and ends below the threshold.
    Fail: the second half never decreases and ends above it.
    Anything else is inconclusive.
    """
    if not seq:
        return PASS
    tail = list(seq[len(seq) // 2:])
    steps = list(zip(tail, tail[1:]))
    if all(b <= a for a, b in steps) and tail[-1] <= threshold:
        return PASS
    if steps and all(b >= a for a, b in steps) and tail[-1] > threshold:
        return FAIL
    return INCONCLUSIVE


def _piece_bracket(c: Curve, k: int, q, sampler, ev):
    f = c.field
    tuples = [tuple(f.coerce(x) for x in t) for t in sample_tuples(sampler, c.domain, k + 1)]
    lower = max((q.evaluate(ev.dq(c, t), f) for t in tuples), default=Fraction(0))
    return lower, certified_upper(c, k, q)


def check_hypothesis(spec: UltrametricGlueSpec, sampler=None) -> list:
    """Coefficient criterion ``||g_n<k>||_{p_2n} <= C n^-n`` plus the decay probe.

    Accept when every certified upper bound meets the criterion, reject
    when a sampled lower bound breaks it, and report inconclusive when the
    bracket straddles it.  The decay probe is a finite-prefix verdict.
    """
    if sampler is None:
        sampler = PAdicGridSampler(depth=3, n_tuples=120)
    probe, cal = spec.probe, spec.calibration
    ev = _Evaluator(symmetric=True)
    rows, rejected, unresolved = [], [], []
    for k in range(probe.k_max + 1):
        for n in range(max(k, 1), len(spec.pieces) + 1):
            c = spec.pieces[n - 1]
            bound = probe.C * Fraction(1, n**n)
            lower, upper = _piece_bracket(c, k, cal.gauge(2 * n), sampler, ev)
            rows.append({"n": n, "k": k, "lower": lower, "upper": upper, "bound": bound})
            if lower > bound:
                rejected.append((n, k))
            elif upper is None or not leq(upper, bound):
                unresolved.append((n, k))
    verdict = FAIL if rejected else (INCONCLUSIVE if unresolved else PASS)
    criterion = CheckResult("glue_um.hypothesis.criterion",
                            "||g_n<k>||_{p_2n} <= C n^-n for all n >= k", verdict,
                            {"C": probe.C, "rejected": rejected, "unresolved": unresolved, "rows": rows})

    probes, worst_seen = [], []
    for a in probe.a_values:
        for k in range(probe.k_max + 1):
            for m in range(probe.m_max + 1):
                seq = []
                for n, c in enumerate(spec.pieces, start=1):
                    lower, upper = _piece_bracket(c, k, cal.gauge(n + m), sampler, ev)
                    seq.append(a**n * (upper if upper is not None else lower))
                v = decay_verdict(seq, probe.threshold)
                probes.append({"a": a, "k": k, "m": m, "verdict": v, "last": seq[-1] if seq else 0})
                worst_seen.append(v)
    decay = CheckResult("glue_um.hypothesis.decay",
                        "a^n ||g_n<k>||_{q_(n+m)} -> 0 (finite prefix verdict)",
                        worst(worst_seen), {"prefix_length": len(spec.pieces), "probes": probes,
                                            "note": "a finite prefix cannot prove a limit"})
    return [criterion, decay]


def step2_note(spec: UltrametricGlueSpec) -> CheckResult:
    """With finitely many pieces every value is a finite sum in the target space."""
    return result("glue_um.finite_model", "plumbing", True, pieces=len(spec.pieces),
                  note="finitely many nonzero pieces: the series is a finite sum")
