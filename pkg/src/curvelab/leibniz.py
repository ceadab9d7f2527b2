"""Product rule for difference quotients.

For a scalar curve ``g`` and a curve ``e``, the order-n difference quotient
of ``g * e`` expands as

    (g e)<n>(x_0..x_n) = sum N_ij * g<#i>(x_i) * e<#j>(x_j)

over pairs of strictly increasing index lists ``i, j`` drawn from
``0..n`` with ``#i + #j = n`` (``#(i_0..i_k) = k``).  The expansion is
built by induction on n: each step substitutes ``x_{n+1}`` for ``x_0``,
subtracts and divides by ``x_{n+1} - x_0``.  Terms that do not involve
index 0 cancel; the others gain index ``n+1`` in one or both factors.

Two forms are kept: the normalized form with sorted index lists (valid by
symmetry of difference quotients), and the raw form produced literally by
the recursion, which needs no symmetry and serves as a cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diffquot import Curve, Product, Session, _Evaluator, sample_tuples, sub_tuples, certified_upper
from .errors import ContextMismatchError, PreconditionError
from .gauges import AbsGauge, Calibration
from .report import CheckResult, leq, result

BASE_TERMS = {((0, 1), (1,)): 1, ((0,), (0, 1)): 1}


def _step(terms: dict, new: int, normalize: bool) -> dict:
    out: dict = {}

    def add(key, c):
        out[key] = out.get(key, 0) + c

    for (i, j), c in terms.items():
        has_i, has_j = i[0] == 0, j[0] == 0
        if has_i and has_j:
            add((i + (new,), j[1:] + (new,) if normalize else (new,) + j[1:]), c)
            add((i, j + (new,)), c)
        elif has_i:
            add((i + (new,), j), c)
        elif has_j:
            add((i, j + (new,)), c)
    return out


def _order_key(item):
    (i, j), _ = item
    return (-len(i), i, j)


@dataclass(frozen=True)
class LeibnizFormula:
    """Terms are ``(i, j, N)`` triples in canonical order."""

    order: int
    terms: tuple
    raw_terms: tuple

    @property
    def coefficient_sum(self) -> int:
        return sum(N for _, _, N in self.terms)

    def to_json(self) -> list:
        return [{"i": list(i), "j": list(j), "N": N} for i, j, N in self.terms]

    def render(self) -> str:
        lines = [f"(g*e)<{self.order}>(x_0..x_{self.order}) ="]
        for i, j, N in self.terms:
            xi = ",".join(f"x{a}" for a in i)
            xj = ",".join(f"x{a}" for a in j)
            lines.append(f"  + {N} * g<{len(i) - 1}>({xi}) * e<{len(j) - 1}>({xj})")
        return "\n".join(lines)


@dataclass(frozen=True)
class ProductConstants:
    """``C[k]`` sums the coefficients of terms with ``#i = k`` at this order."""

    order: int
    C: tuple


def expand(n: int) -> LeibnizFormula:
    if n < 1:
        raise PreconditionError("expansion order must be at least 1")
    norm, raw = dict(BASE_TERMS), dict(BASE_TERMS)
    for m in range(1, n):
        norm = _step(norm, m + 1, normalize=True)
        raw = _step(raw, m + 1, normalize=False)
    terms = tuple((i, j, N) for (i, j), N in sorted(norm.items(), key=_order_key))
    raw_terms = tuple((i, j, N) for (i, j), N in sorted(raw.items(), key=_order_key))
    f = LeibnizFormula(n, terms, raw_terms)
    if f.coefficient_sum > 2**n:
        raise ArithmeticError(f"coefficient sum {f.coefficient_sum} exceeds 2^{n}")
    for i, j, _ in terms:
        if len(i) + len(j) - 2 != n or list(i) != sorted(set(i)) or list(j) != sorted(set(j)):
            raise ArithmeticError(f"malformed term {i}, {j}")
    return f


def constants(f: LeibnizFormula) -> ProductConstants:
    C = [0] * (f.order + 1)
    for i, _, N in f.terms:
        C[len(i) - 1] += N
    if sum(C) > 2**f.order:
        raise ArithmeticError(f"sum of C_k exceeds 2^{f.order}")
    return ProductConstants(f.order, tuple(C))


def _close(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return leq(abs(a - b), 0.0) or abs(a - b) <= 1e-9 * max(abs(a), abs(b), 1.0)
    return a == b


def _rhs(terms, gamma, eta, pts, ev) -> tuple:
    total = [Fraction(0)] * eta.dim
    for i, j, N in terms:
        (g,) = ev.dq(gamma, tuple(pts[a] for a in i))
        e = ev.dq(eta, tuple(pts[b] for b in j))
        for d, v in enumerate(e):
            total[d] += N * g * v
    return tuple(total)


def verify_numeric(f: LeibnizFormula, gamma: Curve, eta: Curve, t) -> CheckResult:
    """Compare both expansion forms with the direct quotient of the product."""
    if gamma.dim != 1:
        raise PreconditionError("first factor must be scalar-valued")
    if gamma.field != eta.field:
        raise ContextMismatchError("factors live over different fields")
    n = f.order
    if len(t) != n + 1:
        raise PreconditionError(f"order {n} needs {n + 1} points")
    field = gamma.field
    pts = tuple(field.coerce(x) for x in t)
    ev = _Evaluator()
    direct = ev.dq(Product(gamma, eta), pts)
    normalized = _rhs(f.terms, gamma, eta, pts, ev)
    raw = _rhs(f.raw_terms, gamma, eta, pts, ev)
    ok = all(_close(a, b) and _close(a, c) for a, b, c in zip(direct, normalized, raw))
    return result(
        f"leibniz.expansion.n{n}",
        "(g*e)<n>(x) = sum N_ij g<#i>(x_i) e<#j>(x_j)",
        ok, points=pts, direct=direct, normalized=normalized, raw=raw,
    )


def product_estimate_check(gamma: Curve, eta: Curve, n: int, cal: Calibration, sampler,
                           certified: bool = True) -> CheckResult:
    """Sampled check of the product estimate.

    Left side: the largest ``q_0((g e)<n>(x))`` over sampled tuples.  Right
    side: ``sum_k C_k sup|g<k>| sup q_n(e<n-k>)``, where each sup is a
    certified bound when one exists and otherwise runs over every ordered
    sub-tuple of the sampled tuples, so the inequality holds for the data.
    """
    prod = Product(gamma, eta)
    field = gamma.field
    tuples = [tuple(field.coerce(x) for x in t) for t in sample_tuples(sampler, prod.domain, n + 1)]
    session = Session()
    ev = session._ev
    q0, qn = cal.gauge(0), cal.gauge(n)
    absg = AbsGauge()
    lhs = Fraction(0)
    for t in tuples:
        v = q0.evaluate(ev.dq(prod, t), field)
        lhs = max(lhs, v)
    C = constants(expand(n)).C if n >= 1 else (1,)
    rhs = Fraction(0)
    sups = []
    for k in range(n + 1):
        a = certified_upper(gamma, k, absg) if certified else None
        b = certified_upper(eta, n - k, qn) if certified else None
        if a is None:
            a = max((absg.evaluate(ev.dq(gamma, s), field)
                     for t in tuples for s in sub_tuples(t, k + 1)), default=Fraction(0))
        if b is None:
            b = max((qn.evaluate(ev.dq(eta, s), field)
                     for t in tuples for s in sub_tuples(t, n - k + 1)), default=Fraction(0))
        sups.append((a, b))
        rhs += C[k] * a * b
    return result(
        f"leibniz.product_estimate.n{n}",
        "||(g*e)<n>||_{q_0} <= sum_k C_k ||g<k>|| ||e<n-k>||_{q_n}",
        leq(lhs, rhs), lhs=lhs, rhs=rhs, C=C, sups=sups, samples=len(tuples),
    )
