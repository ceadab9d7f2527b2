"""Gluing curve pieces on the real line with smooth cut-offs.

Piece n lives on ``[-r_n, r_n]`` and is damped by a cut-off equal to 1
on ``[-s_n, s_n]`` and vanishing beyond ``s_n + 1/n^2``, then moved to the
centre ``t_n``; consecutive supports touch only at their endpoints.
"""
from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .diffquot import (Curve, ExtendByZero, Polynomial, Product, RealInterval, Restrict, Translate,
                       WholeField, _Evaluator, _zeros, sample_tuples, sub_tuples)
from .errors import PreconditionError, SpecError
from .gauges import AbsGauge, Calibration, ConstantCalibration, Vector
from .glue_um import HypothesisProbe, decay_verdict
from .leibniz import constants, expand
from .report import CheckResult, leq, result, worst
from .samplers import RealSampler
from .scalar import QQ, format_scalar

SAFETY_FACTOR = 1.5
REL_TOL = 1e-9


def _g(u: Fraction):
    """The base step function at an exact argument."""
    if u <= 0:
        return Fraction(1)
    if u >= 1:
        return Fraction(0)
    x = float(u)
    # phi(1-x) / (phi(1-x) + phi(x)) = 1 / (1 + exp(1/(1-x) - 1/x))
    e = 1 / (1 - x) - 1 / x
    if e > 700:
        return 0.0
    return 1 / (1 + math.exp(e))


@dataclass(frozen=True, eq=False)
class Bump(Curve):
    """Smooth step: 1 for ``t <= 0``, 0 for ``t >= 1``, built from ``exp(-1/t)``."""

    @property
    def domain(self):
        return WholeField(QQ)

    def value(self, x):
        return (_g(Fraction(x)),)

    def to_json(self):
        return {"bump": {}}


@dataclass(frozen=True, eq=False)
class Cutoff(Curve):
    """``h(t) = g((t-a)/b) g((-t-a)/b)``; arguments are formed exactly."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise PreconditionError(f"cutoff needs a, b > 0, got a={self.a}, b={self.b}")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @property
    def domain(self):
        return WholeField(QQ)

    def value(self, x):
        t = Fraction(x)
        return (_g((t - self.a) / self.b) * _g((-t - self.a) / self.b),)

    def to_json(self):
        return {"cutoff": {"a": format_scalar(self.a), "b": format_scalar(self.b)}}


def base_bump() -> Bump:
    return Bump()


def cutoff(a, b) -> Cutoff:
    return Cutoff(Fraction(a), Fraction(b))


# -- spec and construction ---------------------------------------------------


@dataclass(frozen=True)
class TailRule:
    """How ``s_n`` continues past the listed prefix: zero, or geometric with ``ratio``."""

    rule: str = "zero"
    ratio: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "ratio", Fraction(self.ratio))
        if self.rule not in ("zero", "geometric"):
            raise SpecError(f"unknown tail rule {self.rule!r}")
        if self.rule == "geometric" and not 0 < self.ratio < 1:
            raise SpecError("geometric tail needs 0 < ratio < 1")

    def tail_sum(self, last: Fraction) -> Fraction:
        if self.rule == "zero":
            return Fraction(0)
        return last * self.ratio / (1 - self.ratio)

    def to_json(self):
        d = {"rule": self.rule}
        if self.rule == "geometric":
            d["ratio"] = format_scalar(self.ratio)
        return d


@dataclass
class RealGlueSpec:
    """Real gluing data; ``r`` is normalized to ``s_n + 2/n^2`` on construction."""

    s: list
    pieces: list
    r: list | None = None
    calibration: Calibration = None
    probe: HypothesisProbe = field(default_factory=HypothesisProbe)
    tail: TailRule = field(default_factory=TailRule)
    given_r: list | None = field(default=None, init=False)

    def __post_init__(self):
        self.s = [Fraction(x) for x in self.s]
        if any(x <= 0 for x in self.s):
            raise SpecError("every s_n must be positive")
        if len(self.pieces) > len(self.s):
            raise SpecError(f"{len(self.pieces)} pieces but only {len(self.s)} values of s")
        minimal = [x + Fraction(2, n * n) for n, x in enumerate(self.s, start=1)]
        if self.r is not None:
            given = [Fraction(x) for x in self.r]
            if len(given) != len(self.s):
                raise SpecError("r and s must have the same length")
            for n, (g, m) in enumerate(zip(given, minimal), start=1):
                if g < m:
                    raise SpecError(f"r_{n} = {g} is below s_{n} + 2/{n}^2 = {m}")
            self.given_r = given
        self.r = minimal
        if self.calibration is None:
            self.calibration = ConstantCalibration(AbsGauge())
        pieces = []
        for n, c in enumerate(self.pieces, start=1):
            V = RealInterval(-self.r[n - 1], self.r[n - 1])
            if c.field != QQ:
                raise SpecError(f"piece {n} is not a real curve")
            if not V.is_within(c.domain):
                raise SpecError(f"piece {n} must be defined on [-{self.r[n - 1]}, {self.r[n - 1]}]")
            pieces.append(c if c.domain == V else Restrict(c, V))
        self.pieces = pieces
        if len({c.dim for c in self.pieces}) > 1:
            raise SpecError("pieces differ in dimension")

    @property
    def normalized(self) -> bool:
        return self.given_r is not None and self.given_r != self.r

    @classmethod
    def from_polynomials(cls, s: Sequence, coeff_lists: Sequence, **kw):
        s = [Fraction(x) for x in s]
        pieces = []
        for n, coeffs in enumerate(coeff_lists, start=1):
            rn = s[n - 1] + Fraction(2, n * n)
            rows = coeffs if coeffs and isinstance(coeffs[0], (list, tuple)) else [coeffs]
            pieces.append(Polynomial(tuple(tuple(row) for row in rows), RealInterval(-rn, rn)))
        return cls(s, pieces, **kw)


def centers(spec: RealGlueSpec) -> tuple:
    """Exact centres ``t_n = sum_{j<=n} (r_j + r_{j-1})`` and an upper bound for their limit.

    The bound is ``2 sum s_j + 2 (tail of s) + 4 (sum_{j<=N} 1/j^2 + 1/N)``,
    using ``sum_{j>N} 1/j^2 < 1/N``.
    """
    t, prev, acc = [], Fraction(0), Fraction(0)
    for rn in spec.r:
        acc += rn + prev
        t.append(acc)
        prev = rn
    N = len(spec.s)
    inv_sq = sum((Fraction(1, j * j) for j in range(1, N + 1)), Fraction(0))
    tail = spec.tail.tail_sum(spec.s[-1]) if spec.s else Fraction(0)
    bound = 2 * sum(spec.s, Fraction(0)) + 2 * tail + 4 * (inv_sq + (Fraction(1, N) if N else 1))
    return t, bound


def zeta_piece(spec: RealGlueSpec, n: int) -> Curve:
    """``h_n * g_n`` on ``[-r_n, r_n]`` with ``h_n = cutoff(s_n, 1/n^2)``."""
    c = spec.pieces[n - 1]
    return Product(cutoff(spec.s[n - 1], Fraction(1, n * n)), c)


@dataclass(frozen=True, eq=False)
class GluedCurveRE(Curve):
    spec: RealGlueSpec

    def __post_init__(self):
        t, bound = centers(self.spec)
        etas = [ExtendByZero(Translate(zeta_piece(self.spec, n), -t[n - 1]))
                for n in range(1, len(self.spec.pieces) + 1)]
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "t_limit_bound", bound)
        object.__setattr__(self, "_etas", etas)
        object.__setattr__(self, "_left", [tn - rn for tn, rn in zip(t, self.spec.r)])

    @property
    def domain(self):
        return WholeField(QQ)

    @property
    def dim(self):
        return self.spec.pieces[0].dim if self.spec.pieces else 1

    @property
    def eta_pieces(self) -> list:
        return self._etas

    def locate(self, x) -> int | None:
        """The n with ``t_n - r_n < x < t_n + r_n`` among the pieces, if any."""
        i = bisect.bisect_right(self._left, x) - 1
        hits = [n for n in (i, i + 1) if 0 <= n < len(self._etas)
                and self._left[n] < x < self.t[n] + self.spec.r[n]]
        if len(hits) > 1:
            raise ArithmeticError(f"supports overlap at {x}")
        return hits[0] + 1 if hits else None

    def value(self, x):
        n = self.locate(x)
        if n is None:
            return _zeros(self.dim)
        return self._etas[n - 1].value(x)

    def _dq(self, ids, ev):
        hit = sorted({n for n in map(self.locate, ev.points(ids)) if n is not None})
        out = list(_zeros(self.dim))
        for n in hit:
            for i, v in enumerate(ev.dq_ids(self._etas[n - 1], ids)):
                out[i] += v
        return tuple(out)

    def to_json(self):
        return {"glued_re": True}


def build(spec: RealGlueSpec) -> GluedCurveRE:
    return GluedCurveRE(spec)


def eval_glued(g: GluedCurveRE, x) -> Vector:
    return Vector(g.value(QQ.coerce(x)), QQ)


# -- cut-off constants -------------------------------------------------------


@dataclass(frozen=True)
class MnEstimate:
    """Sampled ``sup |g<k>|`` and the inflated constants ``M_n``."""

    sups: tuple
    raw: tuple
    M: tuple
    safety: float
    C: tuple


def default_bump_sampler(seed: int = 0) -> RealSampler:
    return RealSampler(n_tuples=1500, seed=seed, n_chebyshev=24, n_uniform=24)


def estimate_Mn(n_max: int, sampler=None, safety: float = SAFETY_FACTOR) -> MnEstimate:
    """``M_n = safety * sum_k C_k sup|g<k>| sup|g<n-k>|`` from sampled sups of the bump."""
    if sampler is None:
        sampler = default_bump_sampler()
    g = base_bump()
    ev = _Evaluator(symmetric=True)
    window = RealInterval(Fraction(-1, 4), Fraction(5, 4))
    sups = []
    for k in range(n_max + 1):
        best = 0.0
        for t in sample_tuples(sampler, window, k + 1):
            best = max(best, abs(float(ev.dq(g, tuple(t))[0])))
        sups.append(best)
    raw, Cs = [], []
    for n in range(n_max + 1):
        C = constants(expand(n)).C if n >= 1 else (1,)
        Cs.append(C)
        raw.append(sum(C[k] * sups[k] * sups[n - k] for k in range(n + 1)))
    return MnEstimate(tuple(sups), tuple(raw), tuple(safety * m for m in raw), safety, tuple(Cs))


# -- checks ------------------------------------------------------------------


def check_bump(n_samples: int = 1000, seed: int = 0) -> CheckResult:
    g = base_bump()
    rng = random.Random(f"bump/{seed}")
    xs = sorted(Fraction(rng.uniform(-0.5, 1.5)) for _ in range(n_samples))
    vals = [g.value(x)[0] for x in xs]
    monotone = all(b <= a for a, b in zip(vals, vals[1:]))
    fixed = g.value(-1)[0] == 1 and g.value(2)[0] == 0 and g.value(Fraction(1, 2))[0] == 0.5
    in_range = all(0 <= v <= 1 for v in vals)
    return result("glue_re.bump", "g = 1 on ]-inf,0], g = 0 on [1,inf[, g(1/2) = 1/2, g nonincreasing",
                  monotone and fixed and in_range, monotone=monotone, fixed_values=fixed,
                  in_range=in_range, samples=n_samples)


def check_cutoff(a, b, n_samples: int = 1000, seed: int = 0) -> CheckResult:
    """Plateau, support, range and evenness of ``cutoff(a, b)`` at sampled points."""
    h = cutoff(a, b)
    a, b = h.a, h.b
    rng = random.Random(f"cutoff/{seed}/{a}/{b}")
    span = float(a + b)
    bad = []
    for i in range(n_samples):
        # a third of the samples on the plateau, the rest spread over the support
        t = Fraction(rng.uniform(-float(a), float(a))) if i % 3 == 0 else Fraction(rng.uniform(-1.5 * span, 1.5 * span))
        (v,) = h.value(t)
        (w,) = h.value(-t)
        if abs(t) <= a and v != 1:
            bad.append(("plateau", t, v))
        if abs(t) >= a + b and v != 0:
            bad.append(("support", t, v))
        if not 0 <= v <= 1:
            bad.append(("range", t, v))
        if v != w:
            bad.append(("even", t, v, w))
    return result(f"glue_re.cutoff.a{format_scalar(a)}_b{format_scalar(b)}",
                  "h = 1 on [-a,a], h = 0 off ]-(a+b),a+b[, 0 <= h <= 1, h even",
                  not bad, samples=n_samples, violations=bad[:10])


def check_cutoff_bound(a, b, Mn: MnEstimate, n_max: int = 4, sampler=None) -> list:
    """Empirical check ``sup |h<n>| <= M_n b^-n``."""
    h = cutoff(a, b)
    if sampler is None:
        sampler = RealSampler(n_tuples=600)
    lim = h.a + h.b + h.b / 4
    window = RealInterval(-lim, lim)
    ev = _Evaluator(symmetric=True)
    out = []
    for n in range(n_max + 1):
        lhs = max((abs(float(ev.dq(h, tuple(t))[0])) for t in sample_tuples(sampler, window, n + 1)),
                  default=0.0)
        rhs = Mn.M[n] * float(h.b) ** (-n)
        out.append(result(f"glue_re.cutoff_bound.a{format_scalar(h.a)}_b{format_scalar(h.b)}.n{n}",
                          "||h<n>||_inf <= M_n b^-n (empirical M_n)", leq(lhs, rhs),
                          n=n, lhs=lhs, rhs=rhs, M=Mn.M[n], empirical=True))
    return out


def check_centers(spec: RealGlueSpec) -> CheckResult:
    t, bound = centers(spec)
    r = spec.r
    step_ok = all(t[n + 1] - t[n] == r[n + 1] + r[n] for n in range(len(t) - 1))
    first_ok = not t or t[0] == r[0]
    increasing = all(b > a for a, b in zip(t, t[1:]))
    bounded = all(x < bound for x in t)
    return result("glue_re.centers", "t_1 = r_1, t_(n+1) - t_n = r_(n+1) + r_n, t_n < 2 sum s + 4 sum 1/j^2",
                  step_ok and first_ok and increasing and bounded,
                  t=t[:8], limit_bound=bound, increasing=increasing, exact_steps=step_ok,
                  normalized_r=spec.normalized, tail=spec.tail)


def check_supports(spec: RealGlueSpec) -> CheckResult:
    t, _ = centers(spec)
    r = spec.r
    bad = []
    for m in range(len(t)):
        for n in range(m + 1, len(t)):
            if not t[m] + r[m] <= t[n] - r[n]:
                bad.append((m + 1, n + 1))
    return result("glue_re.supports", "]t_m - r_m, t_m + r_m[ and ]t_n - r_n, t_n + r_n[ disjoint for m != n",
                  not bad, pieces=len(t), violations=bad)


def _rel_close(a, b) -> bool:
    return abs(a - b) <= REL_TOL * max(abs(a), abs(b)) or a == b


def check_identity(g: GluedCurveRE, n_samples: int = 100, seed: int = 0) -> CheckResult:
    """``g(t_n + t) = g_n(t)`` for ``|t| <= s_n`` at sampled ``(n, t)``."""
    spec = g.spec
    rng = random.Random(f"glue-re-identity/{seed}")
    bad, worst_err = [], 0.0
    N = len(spec.pieces)
    for i in range(n_samples if N else 0):
        n = rng.randrange(1, N + 1)
        s = float(spec.s[n - 1])
        t = Fraction(rng.uniform(-s, s)) if i % 10 else Fraction(0)
        x = g.t[n - 1] + t
        got = g.value(x if i % 2 else float(x))
        want = spec.pieces[n - 1].value(t)
        for u, v in zip(got, want):
            err = abs(u - v) / max(abs(v), 1e-300) if v else abs(u)
            worst_err = max(worst_err, float(err))
            if not _rel_close(u, v):
                bad.append((n, t, u, v))
    return result("glue_re.identity", "g(t_n + t) = g_n(t) for |t| <= s_n", not bad,
                  samples=n_samples if N else 0, max_relative_error=worst_err, violations=bad[:10])


def check_off_support(g: GluedCurveRE, n_samples: int = 100, seed: int = 0) -> CheckResult:
    """Zero beyond the last support and inside the band ``s_n + 1/n^2 <= |t| < r_n``."""
    spec = g.spec
    rng = random.Random(f"glue-re-off/{seed}")
    N = len(spec.pieces)
    zero = _zeros(g.dim)
    bad, pts = [], []
    for i in range(n_samples):
        if i % 2 == 0 or not N:
            x = float(g.t_limit_bound) + rng.uniform(0, 10)
        else:
            n = rng.randrange(1, N + 1)
            lo, hi = spec.s[n - 1] + Fraction(1, n * n), spec.r[n - 1]
            t = lo + (hi - lo) * Fraction(rng.randrange(0, 1000), 1000)
            x = g.t[n - 1] + (t if rng.random() < 0.5 else -t)
        pts.append(x)
        if g.value(x) != zero:
            bad.append(x)
    return result("glue_re.off_support", "g(t_n + t) = 0 for s_n + 1/n^2 <= |t|, and beyond t_inf",
                  not bad, samples=len(pts), violations=bad[:10])


def check_limit_boundedness(g: GluedCurveRE, k_max: int = 2, sampler=None) -> CheckResult:
    """Sampled ``sup |g<k>|`` on a window running from the later pieces past ``t_inf``.

    Only boundedness is reported; sampling cannot establish smoothness at
    the limit point.
    """
    spec = g.spec
    N = len(spec.pieces)
    if sampler is None:
        sampler = RealSampler(n_tuples=200)
    if not N:
        return result("glue_re.limit_bounded", "sup |g<k>| near t_inf is finite", True, pieces=0)
    m = (N + 1) // 2
    window = RealInterval(g.t[m - 1] - spec.r[m - 1], g.t_limit_bound + 1)
    ev = _Evaluator(symmetric=True)
    sups = []
    for k in range(k_max + 1):
        best = 0.0
        for t in sample_tuples(sampler, window, k + 1):
            best = max(best, max(abs(float(v)) for v in ev.dq(g, tuple(t))))
        sups.append(best)
    return result("glue_re.limit_bounded", "sup |g<k>| near t_inf is finite (boundedness, not smoothness)",
                  all(math.isfinite(x) for x in sups), window=[window.lo, window.hi], sups=sups,
                  note="a sampled bound says nothing about smoothness at t_inf")


def check_morkll(c: Curve, cal: Calibration, k_max: int, support: tuple, sampler=None) -> list:
    """Extension-by-zero estimate for a curve on ``[a, b]`` vanishing off ``[alpha, beta]``.

    ``r = min(alpha - a, b - beta)``.  The left side is sampled on tuples
    from a window reaching past ``[a, b]``; the right side uses sup over
    every ordered sub-tuple that lies in ``[a, b]``.
    """
    dom = c.domain
    if not isinstance(dom, RealInterval):
        raise PreconditionError("check_morkll needs a curve on a real interval")
    alpha, beta = support
    a, b = dom.lo, dom.hi
    if not (a < alpha <= beta < b):
        raise PreconditionError("support must lie inside the open domain")
    r = min(alpha - a, b - beta)
    if sampler is None:
        sampler = RealSampler(n_tuples=400, n_chebyshev=20, n_uniform=20)
    width = b - a
    window = RealInterval(a - width / 4, b + width / 4)
    eta = ExtendByZero(c)
    ev = _Evaluator(symmetric=True)
    q0 = cal.gauge(0)
    out = []
    for k in range(k_max + 1):
        tuples = [tuple(t) for t in sample_tuples(sampler, window, k + 1)]
        lhs = max((q0.evaluate(ev.dq(eta, t), QQ) for t in tuples), default=0.0)
        terms = []
        for j in range(k + 1):
            q = cal.gauge(k - j)
            s = 0.0
            for t in tuples:
                inside = tuple(x for x in t if dom.contains(x))
                for sub in sub_tuples(inside, j + 1):
                    s = max(s, q.evaluate(ev.dq(c, sub), QQ))
            terms.append(float(2 / r) ** (k - j) * s)
        rhs = max(terms)
        out.append(result(f"glue_re.morkll.k{k}",
                          "||E(c)<k>||_{q_0} <= max_j (2/r)^(k-j) ||c<j>||_{q_(k-j)}, r = min(alpha-a, b-beta)",
                          leq(lhs, rhs), k=k, lhs=lhs, rhs=rhs, terms=terms, r=r, samples=len(tuples)))
    return out


def piece_sup(c: Curve, k: int, q, sampler, ev) -> float:
    best = 0.0
    for t in sample_tuples(sampler, c.domain, k + 1):
        best = max(best, float(q.evaluate(ev.dq(c, tuple(float(x) for x in t)), QQ)))
    return best


def check_hypothesis_real(spec: RealGlueSpec, sampler=None) -> CheckResult:
    """Prefix probe of ``n^l ||g_n<k>||_{q_(n+m)} -> 0`` over the probe grid."""
    if sampler is None:
        sampler = RealSampler(n_tuples=120)
    probe, cal = spec.probe, spec.calibration
    ev = _Evaluator(symmetric=True)
    rows, verdicts = [], []
    for k in range(probe.k_max + 1):
        for m in range(probe.m_max + 1):
            sups = [piece_sup(c, k, cal.gauge(n + m), sampler, ev)
                    for n, c in enumerate(spec.pieces, start=1)]
            for l in range(probe.l_max + 1):
                seq = [n**l * s for n, s in enumerate(sups, start=1)]
                v = decay_verdict(seq, probe.threshold)
                verdicts.append(v)
                rows.append({"k": k, "l": l, "m": m, "verdict": v, "sequence": seq})
    return CheckResult("glue_re.hypothesis", "n^l ||g_n<k>||_{q_(n+m)} -> 0 (finite prefix verdict)",
                       worst(verdicts), {"prefix_length": len(spec.pieces), "probes": rows,
                                         "note": "a finite prefix cannot prove a limit"})


def table_rows(g: GluedCurveRE, k_max: int, Mn: MnEstimate, sampler=None) -> list:
    """Rows ``n, t_n, r_n, sup|g_n<k>|..., M_k n^(2k)...`` for the CSV table."""
    if sampler is None:
        sampler = RealSampler(n_tuples=120)
    spec = g.spec
    ev = _Evaluator(symmetric=True)
    q = AbsGauge()
    rows = []
    for n, c in enumerate(spec.pieces, start=1):
        row = {"n": n, "t_n": format_scalar(g.t[n - 1]), "r_n": format_scalar(spec.r[n - 1])}
        for k in range(k_max + 1):
            row[f"sup_k{k}"] = repr(piece_sup(c, k, q, sampler, ev))
        for k in range(k_max + 1):
            row[f"cutoff_bound_k{k}"] = repr(Mn.M[k] * float(n * n) ** k)
        rows.append(row)
    return rows
