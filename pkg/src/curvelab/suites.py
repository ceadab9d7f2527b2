"""Verification suites run by ``curvelab verify``.

Each suite takes its parameter dict, a seed and the loaded config, and
returns a list of check results.  Parameters not given in the config fall
back to ``DEFAULTS``.
"""
from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from itertools import permutations

from . import glue_re, glue_um
from .diffquot import (PAdicBall, Polynomial, RealInterval, Session, WholeField, certified_upper,
                       diff_quot, diff_quot_coincident, dq_raw, restrict, scale, sup_gauge, translate)
from .gauges import (AbsGauge, BallDescriptor, ConstantCalibration, PNormGauge, ScaledGauge, SumGauge,
                     Vector, calibration_from_rseminorm, check_fake_triangle, check_sandwich, minkowski,
                     partial_sum_bound, triangle_companion)
from .io import parse_re_spec, parse_um_spec
from .leibniz import constants, expand, product_estimate_check, verify_numeric
from .oracles import coincident_limit, newton_divided_difference
from .report import FAIL, CheckResult, leq, result
from .samplers import PAdicGridSampler, RealSampler
from .scalar import QQ, Qp, Scalar, abs_value, in_closed_ball, ultrametric_sum_law

DEFAULTS = {
    "scalar": {"samples": 500},
    "gauges": {"pairs": 1000, "dim": 4},
    "diffquot": {"polynomials": 40, "max_degree": 8, "max_order": 5, "permutation_order": 4},
    "leibniz": {"max_order": 6, "tuples": 10, "bound_order": 10},
    "glue_um": {"identity_samples": 100, "off_samples": 100, "resestim_order": 4, "resestim_tuples": 150},
    "glue_re": {"identity_samples": 100, "off_samples": 100, "cutoff_samples": 1000, "cutoff_order": 4,
                "morkll_order": 3},
}

SUITES = ("scalar", "gauges", "diffquot", "leibniz", "glue_um", "glue_re")

FIELDS = (QQ, Qp(2), Qp(3), Qp(5))


def rand_rational(rng: random.Random, num: int = 50, den: int = 12) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_nonzero(rng: random.Random) -> Fraction:
    while True:
        x = rand_rational(rng)
        if x:
            return x


def distinct_rationals(rng: random.Random, n: int, num: int = 60, den: int = 6) -> tuple:
    out: list = []
    while len(out) < n:
        x = rand_rational(rng, num, den)
        if x not in out:
            out.append(x)
    return tuple(out)


def random_poly(rng: random.Random, field, max_degree: int, domain=None, dim: int = 1) -> Polynomial:
    d = rng.randint(0, max_degree)
    rows = tuple(tuple(rand_rational(rng, 9, 4) for _ in range(d + 1)) for _ in range(dim))
    return Polynomial(rows, domain or WholeField(field))


# -- scalar ------------------------------------------------------------------


def scalar_suite(params: dict, seed: int, config: dict) -> list:
    rng = random.Random(f"scalar/{seed}")
    n = params["samples"]
    out = []
    q2, q3, q5 = Qp(2), Qp(3), Qp(5)
    examples = [
        abs_value(Scalar(12, q2)) == Fraction(1, 4),
        abs_value(Scalar(0, q3)) == 0 and abs_value(Scalar(0, QQ)) == 0,
        abs_value(Scalar(Fraction(5, 6), q3)) == 3,
        ultrametric_sum_law(Scalar(1, q3), Scalar(9, q3)) == 1,
        ultrametric_sum_law(Scalar(2, q5), Scalar(0, q5)) == 1,
        ultrametric_sum_law(Scalar(Fraction(1, 3), q3), Scalar(1, q3)) == 3,
        in_closed_ball(Scalar(4, q3), Scalar(1, q3), Fraction(1, 3)),
        not in_closed_ball(Scalar(2, q3), Scalar(1, q3), Fraction(1, 3)),
    ]
    out.append(result("scalar.examples", "|12|_2 = 1/4, |5/6|_3 = 3, |1 + 9|_3 = 1, 4 in B(1, 1/3)",
                      all(examples), results=examples))
    bad = {"ultrametric": [], "strict": [], "multiplicative": [], "clopen": []}
    for _ in range(n):
        f = rng.choice(FIELDS)
        x, y = rand_rational(rng), rand_rational(rng)
        ax, ay, axy = f.abs(x), f.abs(y), f.abs(x + y)
        if f.abs(x * y) != ax * ay:
            bad["multiplicative"].append((repr(f), x, y))
        if not f.is_ultrametric:
            continue
        if axy > max(ax, ay):
            bad["ultrametric"].append((repr(f), x, y))
        if ay < ax and axy != ax:
            bad["strict"].append((repr(f), x, y))
        c = rand_rational(rng)
        r = Fraction(f.prime) ** rng.randint(-2, 3)
        z = x + f.prime ** rng.randint(0, 4) * rand_rational(rng, 20, 1) * r
        if f.abs(x - c) <= r and f.abs(z - x) <= r and not f.abs(z - c) <= r:
            bad["clopen"].append((repr(f), x, z, c, r))
    anchors = {
        "ultrametric": "|x+y|_p <= max(|x|_p, |y|_p)",
        "strict": "|y| < |x| implies |x+y| = |x|",
        "multiplicative": "|xy| = |x||y|",
        "clopen": "x in B(c, r) and |y-x| <= r imply y in B(c, r)",
    }
    for key, anchor in anchors.items():
        out.append(result(f"scalar.{key}", anchor, not bad[key], samples=n, violations=bad[key][:5]))
    return out


# -- gauges ------------------------------------------------------------------


def _rand_vector(rng, field, dim):
    return Vector(tuple(rand_rational(rng) for _ in range(dim)), field)


def gauges_suite(params: dict, seed: int, config: dict) -> list:
    rng = random.Random(f"gauges/{seed}")
    n, dim = params["pairs"], params["dim"]
    out = []
    half = PNormGauge(Fraction(1, 2))
    one = PNormGauge(Fraction(1))
    q3 = Qp(3)
    e1 = one(Vector.of([3, 4])) == 7
    e2 = abs(half(Vector.of([3, 4])) - (math.sqrt(3) + 2) ** 2) < 1e-12
    e3 = AbsGauge()(Vector.of([12], Qp(2))) == Fraction(1, 4)
    out.append(result("gauges.eval_examples", "||(3,4)||_1 = 7, ||(3,4)||_(1/2) = (sqrt 3 + 2)^2, |12|_2 = 1/4",
                      e1 and e2 and e3, results=[e1, e2, e3]))

    unit3 = BallDescriptor(AbsGauge(), Fraction(1), "closed")
    m1 = minkowski(unit3, Vector.of([9], q3), [Fraction(c) for c in ("1", "3", "9", "1/3", "1/9")])
    unit1 = BallDescriptor(one, Fraction(1), "closed")
    m2 = minkowski(unit1, Vector.of([2, 0]), [Fraction(1), Fraction(2), Fraction(4)])
    m3 = minkowski(unit1, Vector.of([0, 0]), [Fraction(1), Fraction(1, 8)])
    out.append(result("gauges.minkowski_examples", "mu_U(x) = inf{|t| : x in tU}",
                      m1 == Fraction(1, 9) and m2 == 2 and m3 == Fraction(1, 8), values=[m1, m2, m3]))

    samples = [_rand_vector(rng, QQ, 2) for _ in range(100)] + [Vector.zero(2, QQ)]
    own = BallDescriptor(one, Fraction(1), "open")
    out.append(check_sandwich(one, own, samples))
    counter = check_sandwich(ScaledGauge(one, Fraction(2)), own, samples)
    out.append(result("gauges.sandwich_premise", "q <= mu_U fails when U is not inside B_1^q(0)",
                      counter.verdict == FAIL, violations=len(counter.witness.get("violations", []))))

    gauges = [("abs_QQ", AbsGauge(), QQ, 1), ("abs_Q3", AbsGauge(), q3, 1), ("l1", one, QQ, dim),
              ("l_half", half, QQ, dim), ("l1_Q5", one, Qp(5), dim),
              ("scaled", ScaledGauge(half, Fraction(3)), QQ, dim),
              ("sum", SumGauge((one, half)), QQ, dim)]
    bad = []
    for name, q, f, d in gauges:
        for _ in range(max(1, n // len(gauges))):
            x = _rand_vector(rng, f, d)
            t = rand_nonzero(rng)
            lhs, rhs = q(x.scale(t)), f.abs(t) * q(x)
            if not (lhs == rhs if isinstance(lhs, Fraction) and isinstance(rhs, Fraction)
                    else abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))):
                bad.append((name, x.coords, t))
    out.append(result("gauges.homogeneity", "q(t x) = |t| q(x)", not bad, samples=n, violations=bad[:5]))

    pairs_l1 = [(_rand_vector(rng, QQ, dim), _rand_vector(rng, QQ, dim)) for _ in range(n)]
    pairs_l1.append((Vector.zero(dim, QQ), Vector.zero(dim, QQ)))
    out.append(check_fake_triangle(ConstantCalibration(one), pairs_l1, 3))
    strong = calibration_from_rseminorm(half, Fraction(1, 2))
    ft = check_fake_triangle(strong, pairs_l1, 3)
    out.append(ft)
    pairs_q3 = [(_rand_vector(rng, q3, 1), _rand_vector(rng, q3, 1)) for _ in range(n)]
    out.append(_renamed(check_fake_triangle(ConstantCalibration(AbsGauge(q3), "strong"), pairs_q3, 3),
                        "gauges.fake_triangle.ultrametric"))

    comp_bad = []
    for name, q, f in (("l_half", half, QQ), ("l1", one, QQ), ("abs_Q3", AbsGauge(), q3), ("abs_QQ", AbsGauge(), QQ)):
        p = triangle_companion(q)
        d = 1 if name.startswith("abs") else dim
        for _ in range(max(1, n // 4)):
            x, y = _rand_vector(rng, f, d), _rand_vector(rng, f, d)
            if not leq(q(x + y), max(p(x), p(y))):
                comp_bad.append((name, x.coords, y.coords))
    four = triangle_companion(half)
    out.append(result("gauges.triangle_companion", "q(x+y) <= max(p(x), p(y))",
                      not comp_bad and four.factor == 4 and triangle_companion(AbsGauge(q3)) == AbsGauge(q3),
                      samples=n, violations=comp_bad[:5]))

    ps_bad = []
    for i in range(n):
        L = rng.randint(1, 8)
        base = _rand_vector(rng, QQ, dim)
        ratio = Fraction(rng.randint(1, 7), 8) * rng.choice([1, -1])
        terms = [base.scale(ratio**k) for k in range(L)]
        m = rng.randint(1, L)
        k = rng.randint(m, L)
        r = partial_sum_bound(terms, strong, m, k)
        if not r.passed:
            ps_bad.append(r.witness)
    zero = partial_sum_bound([Vector.zero(dim, QQ)] * 3, strong, 1, 3)
    out.append(result("gauges.partial_sum", "q_0(sum_{k=m}^n x_k) <= sum_{k=m}^n q_k(x_k)",
                      not ps_bad and zero.passed, samples=n, violations=ps_bad[:5],
                      calibration=strong))
    return out


def _renamed(check: CheckResult, new_id: str) -> CheckResult:
    return CheckResult(new_id, check.anchor, check.verdict, check.witness)


# -- diffquot ----------------------------------------------------------------


def diffquot_suite(params: dict, seed: int, config: dict) -> list:
    rng = random.Random(f"diffquot/{seed}")
    out = []
    cube = Polynomial.scalar([0, 0, 0, 1])
    ex = [
        diff_quot(cube, 2, [0, 1, 2]).coords == (3,),
        diff_quot(Polynomial.scalar([5]), 1, [2, 7]).coords == (0,),
        diff_quot(Polynomial.scalar([0, 1]), 1, [2, 7]).coords == (1,),
        diff_quot(Polynomial.scalar([0, 1]), 2, [2, 7, 9]).coords == (0,),
        diff_quot_coincident(cube, 2, 1).coords == (3,),
        diff_quot_coincident(cube, 0, 2).coords == (8,),
        diff_quot_coincident(cube, 5, 2).coords == (0,),
    ]
    out.append(result("diffquot.examples", "x^3<2>(0,1,2) = 3, 2!^-1 (x^3)''(1) = 3", all(ex), results=ex))

    out += core_identity_checks(rng, params)
    out.append(_transform_check(rng, params))
    out.append(_sup_bracket_check(rng, params))
    return out


def core_identity_checks(rng: random.Random, params: dict) -> list:
    """Symmetry, recursion and derivative identity on random polynomials.

    With ``params["oracles"]`` (the default) the Newton closed form and the
    interpolated coincident limit are cross-checked as well.
    """
    oracles = params.get("oracles", True)
    sym_bad, rec_bad, coin_bad, newton_bad, deriv_bad = [], [], [], [], []
    for i in range(params["polynomials"]):
        f = FIELDS[i % len(FIELDS)]
        c = random_poly(rng, f, params["max_degree"])
        for k in range(params["max_order"] + 1):
            pts = distinct_rationals(rng, k + 1)
            session = Session(ordered=True)
            base = diff_quot(c, k, pts, session)
            if k <= params["permutation_order"]:
                for perm in permutations(pts):
                    if diff_quot(c, k, perm, session) != base:
                        sym_bad.append((i, k, pts, perm))
                        break
            if k >= 1:
                hi = diff_quot(c, k - 1, (pts[-1],) + pts[1:-1])
                lo = diff_quot(c, k - 1, pts[:-1])
                if base.coords[0] * (pts[-1] - pts[0]) != (hi - lo).coords[0]:
                    rec_bad.append((i, k, pts))
            x = rand_rational(rng)
            at_x = diff_quot(c, k, [x] * (k + 1))
            if math.factorial(k) * at_x.coords[0] != _kth_derivative(c, k, x):
                deriv_bad.append((i, k, x))
            if oracles:
                vals = [c.value(y)[0] for y in pts]
                if newton_divided_difference(vals, pts) != base.coords[0]:
                    newton_bad.append((i, k, pts))
                sym = diff_quot_coincident(c, k, x)
                if at_x != sym or sym.coords != coincident_limit(c, k, x, c.degree):
                    coin_bad.append((i, k, x))
    n = params["polynomials"]
    out = [
        result("diffquot.symmetry", "c<k>(x_s(0), ..., x_s(k)) = c<k>(x_0, ..., x_k) for permutations s",
               not sym_bad, polynomials=n, violations=sym_bad[:5]),
        result("diffquot.recursion", "c<k>(x)(x_k - x_0) = c<k-1>(x_k, x_1..x_(k-1)) - c<k-1>(x_0..x_(k-1))",
               not rec_bad, polynomials=n, violations=rec_bad[:5]),
        result("diffquot.derivative", "c^(k)(x) = k! c<k>(x,...,x)",
               not deriv_bad, polynomials=n, violations=deriv_bad[:5]),
    ]
    if oracles:
        out.append(result("diffquot.newton", "c<k>(x) = sum_i c(x_i) / prod_(j != i)(x_i - x_j)",
                          not newton_bad, polynomials=n, violations=newton_bad[:5]))
        out.append(result("diffquot.coincident", "c<k>(x,...,x) = lim_(e->0) c<k>(x, x+e, ..., x+ke)",
                          not coin_bad, polynomials=n, violations=coin_bad[:5]))
    return out


def _kth_derivative(c: Polynomial, k: int, x):
    d = c
    for _ in range(k):
        d = d.derivative()
    return d.value(x)[0]


def _transform_check(rng, params) -> CheckResult:
    bad = []
    sq = Polynomial.scalar([0, 0, 1])
    eta = scale(sq, 2)
    ex = diff_quot(eta, 1, [1, 3]).coords == (16,) and diff_quot(sq, 1, [2, 6]).coords == (8,)
    for i in range(params["polynomials"]):
        f = FIELDS[i % len(FIELDS)]
        c = random_poly(rng, f, 6)
        t0, a = rand_rational(rng), rand_nonzero(rng)
        tr, sc = translate(c, t0), scale(c, a)
        k = rng.randint(0, 4)
        pts = distinct_rationals(rng, k + 1)
        if diff_quot(tr, k, pts) != diff_quot(c, k, [x + t0 for x in pts]):
            bad.append(("translate", i, k))
        if diff_quot(sc, k, pts) != diff_quot(c, k, [a * x for x in pts]).scale(a**k):
            bad.append(("scale", i, k))
        if f.is_ultrametric:
            big = PAdicBall(Fraction(0), Fraction(f.prime) ** 2, f)
            small = PAdicBall(Fraction(0), Fraction(1), f)
            cb = c.with_domain(big)
            q = AbsGauge()
            samp = PAdicGridSampler(depth=2, n_tuples=40, seed=i)
            whole = sup_gauge(cb, k, q, samp)
            part = sup_gauge(restrict(cb, small), k, q, samp)
            if not (part.upper is None or part.upper <= whole.upper):
                bad.append(("restrict", i, k))
            # sampled scaling law on matched tuples
            sc_b = scale(cb, f.prime)
            inner = [tuple(f.prime * x for x in t) for t in samp.tuples(sc_b.domain, k + 1)]
            lo_scaled = sup_gauge(sc_b, k, q, samp).lower
            lo_orig = max((q.evaluate(dq_raw(cb, t), f) for t in inner), default=Fraction(0))
            if lo_scaled != f.abs(f.prime) ** k * lo_orig:
                bad.append(("scale_sup", i, k))
    return result("diffquot.transforms",
                  "(c(.+t0))<k>(x) = c<k>(x+t0); (c(a.))<k>(x) = a^k c<k>(ax); ||(c|V)<k>|| <= ||c<k>||",
                  ex and not bad, polynomials=params["polynomials"], violations=bad[:5])


def _sup_bracket_check(rng, params) -> CheckResult:
    bad = []
    q3 = Qp(3)
    ball = PAdicBall(Fraction(0), Fraction(1, 3), q3)
    e = sup_gauge(Polynomial.scalar([0, 3], ball), 1, AbsGauge(), PAdicGridSampler(depth=3))
    ex = e.lower == e.upper == Fraction(1, 3)
    for i in range(params["polynomials"]):
        f = FIELDS[1 + i % 3]
        R = Fraction(f.prime) ** rng.randint(-2, 2)
        ball = PAdicBall(rand_rational(rng, 5, 1), R, f)
        c = random_poly(rng, f, 6, ball)
        k = rng.randint(0, 4)
        est = sup_gauge(c, k, AbsGauge(), PAdicGridSampler(depth=2, n_tuples=40, seed=i))
        if est.upper is None or est.lower > est.upper:
            bad.append((i, k, est.lower, est.upper))
        m = rng.randint(k, 6)
        mono = Polynomial.scalar([0] * m + [1], PAdicBall(Fraction(0), R, f))
        if certified_upper(mono, k, AbsGauge()) != R ** (m - k):
            bad.append(("monomial", i, m, k))
    return result("diffquot.sup_bracket", "sampled sup ||c<k>|| <= max_m |b_m| R^(m-k)",
                  ex and not bad, polynomials=params["polynomials"], violations=bad[:5])


# -- leibniz -----------------------------------------------------------------


def leibniz_suite(params: dict, seed: int, config: dict) -> list:
    rng = random.Random(f"leibniz/{seed}")
    out = []
    f1, f2 = expand(1), expand(2)
    ok1 = f1.terms == (((0, 1), (1,), 1), ((0,), (0, 1), 1))
    ok2 = f2.terms == (((0, 1, 2), (1,), 1), ((0, 2), (1, 2), 1), ((0,), (0, 1, 2), 1))
    out.append(result("leibniz.base_formulas", "(ge)<1> = g<1>(x0,x1)e(x1) + g(x0)e<1>(x0,x1)",
                      ok1 and ok2, n1=f1.to_json(), n2=f2.to_json()))
    bounds, Cs = [], {}
    for n in range(1, params["bound_order"] + 1):
        f = expand(n)
        C = constants(f).C
        Cs[n] = C
        bounds.append(f.coefficient_sum <= 2**n and sum(C) <= 2**n and f == expand(n))
    out.append(result("leibniz.coefficient_bounds", "sum N_ij <= 2^n, sum_k C_k <= 2^n",
                      all(bounds), constants=Cs,
                      note="C_k is reported per order n"))
    bad = []
    for field in (QQ, Qp(5)):
        for n in range(1, params["max_order"] + 1):
            f = expand(n)
            for _ in range(params["tuples"]):
                g = random_poly(rng, field, 4)
                e = random_poly(rng, field, 4, dim=rng.choice([1, 2]))
                r = verify_numeric(f, g, e, distinct_rationals(rng, n + 1))
                if not r.passed:
                    bad.append(r.witness)
    one = verify_numeric(expand(3), Polynomial.scalar([1]), Polynomial.scalar([0, 0, 0, 0, 1]), (0, 1, 2, 5))
    out.append(result("leibniz.expansion", "(g*e)<n>(x) = sum N_ij g<#i>(x_i) e<#j>(x_j)",
                      not bad and one.passed, tuples=2 * params["max_order"] * params["tuples"],
                      violations=bad[:3]))

    x = Polynomial.scalar([0, 1], RealInterval(Fraction(-1), Fraction(1)))
    zero = Polynomial.scalar([0], RealInterval(Fraction(-1), Fraction(1)))
    cal = ConstantCalibration(AbsGauge())
    rs = RealSampler(n_tuples=100, seed=seed)
    checks = [product_estimate_check(x, zero, 2, cal, rs), product_estimate_check(x, x, 1, cal, rs)]
    q5 = Qp(5)
    ball = PAdicBall(Fraction(0), Fraction(1, 5), q5)
    for n in (1, 2, 3):
        g = random_poly(rng, q5, 4, ball)
        e = random_poly(rng, q5, 4, ball, dim=2)
        checks.append(product_estimate_check(g, e, n, ConstantCalibration(PNormGauge()),
                                             PAdicGridSampler(depth=2, n_tuples=60, seed=seed)))
        checks.append(product_estimate_check(random_poly(rng, QQ, 4, RealInterval(-1, 2)),
                                             random_poly(rng, QQ, 4, RealInterval(-1, 2)), n, cal, rs))
    out.append(result("leibniz.product_estimate",
                      "||(g*e)<n>||_{q_0} <= sum_k C_k ||g<k>|| ||e<n-k>||_{q_n}",
                      all(c.passed for c in checks), cases=[c.witness for c in checks]))
    return out


# -- gluing ------------------------------------------------------------------


def glue_um_suite(params: dict, seed: int, config: dict) -> list:
    spec = parse_um_spec(config["ultrametric"])
    g = glue_um.build(spec)
    out = [glue_um.check_disjoint(spec), glue_um.check_identity(g, params["identity_samples"], seed),
           glue_um.check_off_support(g, params["off_samples"], seed), glue_um.step2_note(spec)]
    out += glue_um.check_hypothesis(spec, PAdicGridSampler(depth=3, n_tuples=60, seed=seed))
    f = spec.field
    ex = [all(glue_um.locate(g, spec.center(n)) == n for n in range(1, len(spec.pieces) + 1)),
          g.value(Fraction(0)) == (0,) * g.dim]
    c1 = spec.pieces[0] if spec.pieces else None
    if c1 is not None:
        eta = glue_um.extend_by_zero(c1)
        inside, outside = Fraction(0), Fraction(1) + f.prime ** 5
        if c1.domain.contains(outside):
            outside = Fraction(f.prime) ** (c1.domain.exponent - 1)
        ex.append(diff_quot(eta, 1, [inside, outside]).coords
                  == tuple(-v / (outside - inside) for v in c1.value(inside)))
        ex.append(g.value(spec.center(1)) == c1.value(Fraction(0)))
    out.append(result("glue_um.examples", "g(rho^(n-1)) = g_n(0), g(0) = 0, E(c)<1>(x0,x1) = -c(x0)/(x1-x0)",
                      all(ex), results=ex))
    samp = PAdicGridSampler(depth=3, widen=1, n_tuples=params["resestim_tuples"], seed=seed)
    for n, c in enumerate(spec.pieces, start=1):
        for r in glue_um.check_resestim(c, params["resestim_order"], spec.calibration, samp):
            out.append(_renamed(r, r.id.replace("resestim", f"resestim.piece{n}")))
    return out


def glue_re_suite(params: dict, seed: int, config: dict) -> list:
    spec = parse_re_spec(config["real"])
    g = glue_re.build(spec)
    out = [glue_re.check_bump(seed=seed), glue_re.check_centers(spec), glue_re.check_supports(spec),
           glue_re.check_identity(g, params["identity_samples"], seed),
           glue_re.check_off_support(g, params["off_samples"], seed),
           glue_re.check_hypothesis_real(spec, RealSampler(n_tuples=80, seed=seed)),
           glue_re.check_limit_boundedness(g, 2, RealSampler(n_tuples=150, seed=seed))]
    Mn = glue_re.estimate_Mn(params["cutoff_order"], glue_re.default_bump_sampler(seed))
    out.append(result("glue_re.Mn", "M_n = 1.5 sum_k C_k ||g<k>|| ||g<n-k>|| (empirical)",
                      Mn.raw[0] == 1 and all(m >= 1 for m in Mn.M), raw=Mn.raw, M=Mn.M, sups=Mn.sups,
                      safety=Mn.safety, empirical=True))
    for a, b in ((1, 1), (1, Fraction(1, 4)), (Fraction(1, 2), Fraction(1, 9))):
        out.append(glue_re.check_cutoff(a, b, params["cutoff_samples"], seed))
        out += glue_re.check_cutoff_bound(a, b, Mn, params["cutoff_order"],
                                          RealSampler(n_tuples=300, seed=seed))
    if spec.pieces:
        sampler = RealSampler(n_tuples=150, seed=seed)
        for n in range(1, min(len(spec.pieces), 3) + 1):
            z = glue_re.zeta_piece(spec, n)
            w = spec.s[n - 1] + Fraction(1, n * n)
            for r in glue_re.check_morkll(z, spec.calibration, params["morkll_order"], (-w, w), sampler):
                out.append(_renamed(r, r.id.replace("morkll", f"morkll.piece{n}")))
    return out


RUNNERS = {
    "scalar": scalar_suite,
    "gauges": gauges_suite,
    "diffquot": diffquot_suite,
    "leibniz": leibniz_suite,
    "glue_um": glue_um_suite,
    "glue_re": glue_re_suite,
}


def run_suite(name: str, seed: int, config: dict) -> list:
    """Run one suite; returns ``(check, elapsed_seconds)`` pairs."""
    params = dict(DEFAULTS[name])
    params.update(config.get("suites", {}).get(name, {}))
    start = time.perf_counter()
    checks = RUNNERS[name](params, seed, config)
    elapsed = (time.perf_counter() - start) / max(len(checks), 1)
    return [(c, elapsed) for c in checks]
