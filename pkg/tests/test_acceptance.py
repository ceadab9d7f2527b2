"""Acceptance criteria at full size, each with its runtime budget."""
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

from curvelab import glue_re, glue_um
from curvelab.diffquot import PAdicBall
from curvelab.gauges import AbsGauge, ConstantCalibration
from curvelab.io import load_config, parse_re_spec, parse_um_spec, validate
from curvelab.leibniz import constants, expand, verify_numeric
from curvelab.report import FAIL, PASS
from curvelab.samplers import PAdicGridSampler, RealSampler
from curvelab.scalar import Qp
from curvelab.suites import DEFAULTS, FIELDS, core_identity_checks, distinct_rationals, gauges_suite, random_poly


def test_criterion_1_difference_quotient_core(acceptance_log):
    start = time.perf_counter()
    params = {"polynomials": 200, "max_degree": 8, "max_order": 5, "permutation_order": 5, "oracles": False}
    checks = core_identity_checks(random.Random("acceptance/1"), params)
    elapsed = time.perf_counter() - start
    ok = [c.id for c in checks] == ["diffquot.symmetry", "diffquot.recursion", "diffquot.derivative"]
    ok = ok and all(c.passed for c in checks)
    detail = ", ".join(f"{c.id}={c.verdict}" for c in checks)
    assert acceptance_log("1 difference-quotient core", ok, elapsed, 10, detail), detail
    # independent oracles on the same polynomials, outside the timed budget
    extra = core_identity_checks(random.Random("acceptance/1"), {**params, "oracles": True})
    assert all(c.passed for c in extra), [c.id for c in extra if not c.passed]


def test_criterion_2_leibniz(acceptance_log):
    start = time.perf_counter()
    rng = random.Random("acceptance/2")
    first = expand(1).terms == (((0, 1), (1,), 1), ((0,), (0, 1), 1))
    second = expand(2).terms == (((0, 1, 2), (1,), 1), ((0, 2), (1, 2), 1), ((0,), (0, 1, 2), 1))
    failures, count = [], 0
    for field in FIELDS:
        for n in range(1, 7):
            f = expand(n)
            for _ in range(50):
                g = random_poly(rng, field, 4)
                e = random_poly(rng, field, 4, dim=rng.choice([1, 2]))
                r = verify_numeric(f, g, e, distinct_rationals(rng, n + 1))
                count += 1
                if not r.passed:
                    failures.append(r.witness)
    bounds = all(expand(n).coefficient_sum <= 2**n and sum(constants(expand(n)).C) <= 2**n
                 for n in range(1, 11))
    elapsed = time.perf_counter() - start
    ok = first and second and not failures and bounds
    detail = f"tuples={count} mismatches={len(failures)} bounds={bounds}"
    assert acceptance_log("2 product rule expansion", ok, elapsed, 30, detail), failures[:2]


def test_criterion_3_ultrametric_extension_by_zero(acceptance_log):
    start = time.perf_counter()
    rng = random.Random("acceptance/3")
    cal = ConstantCalibration(AbsGauge())
    cases, bad, short, inexact = 0, [], [], []
    for p in (2, 3, 5):
        f = Qp(p)
        for i in range(3):
            ball = PAdicBall(Fraction(0), Fraction(p) ** rng.randint(-2, 1), f)
            c = random_poly(rng, f, 5, ball)
            sampler = PAdicGridSampler(depth=3, widen=1, n_tuples=500, n_random=500, seed=i)
            for r in glue_um.check_resestim(c, 4, cal, sampler):
                cases += 1
                if not r.passed:
                    bad.append((p, i, r.witness))
                if r.witness["samples"] != 500:
                    short.append((p, i, r.id, r.witness["samples"]))
                if not (isinstance(r.witness["lhs"], Fraction) and isinstance(r.witness["rhs"], Fraction)):
                    inexact.append((p, i, r.id))
    elapsed = time.perf_counter() - start
    ok = not bad and not short and not inexact
    detail = f"cases={cases} violations={len(bad)} undersampled={len(short)} inexact={len(inexact)}"
    assert acceptance_log("3 ultrametric extension by zero", ok, elapsed, 60, detail), (bad[:2], short[:2])


def test_criterion_4_ultrametric_glue(acceptance_log, default_config, adversarial_config_path):
    start = time.perf_counter()
    spec = parse_um_spec(default_config["ultrametric"])
    p = spec.field.prime
    shape = len(spec.pieces) == 8 and all(
        c.as_polynomial().coeffs == ((0, Fraction(p) ** (n * n)),) for n, c in enumerate(spec.pieces, start=1))
    g = glue_um.build(spec)
    crit, decay = glue_um.check_hypothesis(spec)
    disjoint = glue_um.check_disjoint(spec)
    ident = glue_um.check_identity(g, 100)
    off = glue_um.check_off_support(g, 100)
    adv = parse_um_spec(load_config(adversarial_config_path)["ultrametric"])
    adv_crit, _ = glue_um.check_hypothesis(adv)
    elapsed = time.perf_counter() - start
    ok = (shape and crit.verdict == PASS and disjoint.passed and ident.passed and ident.witness["samples"] == 100
          and off.passed and off.witness["samples"] == 100 and adv_crit.verdict == FAIL)
    detail = (f"hypothesis={crit.verdict} decay={decay.verdict} disjoint={disjoint.verdict} "
              f"identity={ident.verdict} off_support={off.verdict} adversarial={adv_crit.verdict}")
    assert acceptance_log("4 ultrametric glue", ok, elapsed, 30, detail), detail


def test_criterion_5_real_glue(acceptance_log, default_config):
    start = time.perf_counter()
    spec = parse_re_spec(default_config["real"])
    shape = (spec.s == [Fraction(1, 2**n) for n in range(1, 7)]
             and spec.r == [Fraction(1, 2**n) + Fraction(2, n * n) for n in range(1, 7)]
             and all(c.as_polynomial().coeffs == ((0, 0, Fraction(1, 2 ** (n * n))),)
                     for n, c in enumerate(spec.pieces, start=1)))
    g = glue_re.build(spec)
    t, _ = glue_re.centers(spec)
    centres = glue_re.check_centers(spec)
    ident = glue_re.check_identity(g, 100)
    supports = glue_re.check_supports(spec)
    elapsed = time.perf_counter() - start
    ok = (shape and t[0] == Fraction(5, 2) and t[1] == Fraction(23, 4) and centres.passed
          and ident.passed and ident.witness["max_relative_error"] <= 1e-9 and supports.passed)
    detail = (f"t1={t[0]} t2={t[1]} centres={centres.verdict} identity={ident.verdict} "
              f"max_rel_err={ident.witness['max_relative_error']:.1e} supports={supports.verdict}")
    assert acceptance_log("5 real glue", ok, elapsed, 30, detail), detail


def test_criterion_6_cutoff_suite(acceptance_log):
    start = time.perf_counter()
    Mn = glue_re.estimate_Mn(4)
    results = []
    for a, b in ((1, 1), (1, Fraction(1, 4)), (Fraction(1, 2), Fraction(1, 9))):
        results.append(glue_re.check_cutoff(a, b, 1000))
        results += glue_re.check_cutoff_bound(a, b, Mn, 4, RealSampler(n_tuples=1000))
    elapsed = time.perf_counter() - start
    failed = [r.id for r in results if not r.passed]
    detail = f"checks={len(results)} failed={failed} M={[round(m, 3) for m in Mn.M]}"
    assert acceptance_log("6 cut-off suite", not failed, elapsed, 60, detail), failed


def test_criterion_7_calibration_suite(acceptance_log):
    start = time.perf_counter()
    params = {**DEFAULTS["gauges"], "pairs": 1000}
    checks = {c.id: c for c in gauges_suite(params, 20261014, {})}
    elapsed = time.perf_counter() - start
    needed = ("gauges.fake_triangle.ordinary", "gauges.fake_triangle.strong", "gauges.fake_triangle.ultrametric",
              "gauges.triangle_companion", "gauges.partial_sum")
    sizes_ok = (checks["gauges.fake_triangle.strong"].witness["pairs"] >= 1000
                and checks["gauges.partial_sum"].witness["samples"] >= 1000
                and checks["gauges.triangle_companion"].witness["samples"] >= 1000)
    failed = [i for i, c in checks.items() if not c.passed]
    ok = not failed and sizes_ok and all(i in checks for i in needed)
    detail = f"checks={len(checks)} failed={failed}"
    assert acceptance_log("7 calibration suite", ok, elapsed, 20, detail), failed


def _verify(*args):
    return subprocess.run([sys.executable, "-m", "curvelab.cli", "verify", *args], capture_output=True, text=True)


def test_criterion_8_cli_end_to_end(acceptance_log, tmp_path, adversarial_config_path):
    start = time.perf_counter()
    r1, r2 = tmp_path / "a.json", tmp_path / "b.json"
    first = _verify("--suite", "all", "--out", str(r1))
    second = _verify("--suite", "all", "--out", str(r2))
    adversarial = _verify("--suite", "all", "--config", adversarial_config_path)
    elapsed = time.perf_counter() - start
    docs = [json.loads(p.read_text()) for p in (r1, r2)]
    for d in docs:
        validate(d, "report.schema.json")
        for c in d["checks"]:
            c.pop("timing")
    ok = (first.returncode == 0 and second.returncode == 0 and adversarial.returncode == 1
          and docs[0] == docs[1] and docs[0]["verdict"] == PASS)
    detail = (f"default_exit={first.returncode} adversarial_exit={adversarial.returncode} "
              f"deterministic={docs[0] == docs[1]}")
    assert acceptance_log("8 end-to-end CLI", ok, elapsed, 180, detail), (detail, adversarial.stderr[-500:])
    assert FAIL in adversarial.stderr or "FAIL" in adversarial.stderr
