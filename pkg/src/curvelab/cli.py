"""``curvelab verify | glue | leibniz | diffquot``.

Exit codes: 0 when no check fails, 1 when any check fails, 2 on a config
or spec error.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from importlib import resources

from . import glue_re, glue_um
from .diffquot import diff_quot, diff_quot_coincident
from .errors import CurveLabError
from .io import load_config, parse_curve, parse_field, parse_re_spec, parse_um_spec, read_json, validate
from .leibniz import constants, expand
from .report import FLOAT_SLACK, Report
from .scalar import format_scalar
from .suites import DEFAULTS, SUITES, run_suite


def default_config_path() -> str:
    return str(resources.files("curvelab").joinpath("data", "default.json"))


def resolve_seed(flag, config: dict) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("CURVELAB_SEED")
    if env not in (None, ""):
        try:
            return int(env)
        except ValueError:
            raise CurveLabError(f"CURVELAB_SEED must be an integer, got {env!r}") from None
    return int(config.get("seed", 0))


def _write(text: str, out) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    config = load_config(args.config or default_config_path())
    seed = resolve_seed(args.seed, config)
    names = SUITES if args.suite == "all" else tuple(args.suite.split(","))
    for name in names:
        if name not in SUITES:
            raise CurveLabError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    params = {n: {**DEFAULTS[n], **config.get("suites", {}).get(n, {})} for n in names}
    report = Report(args.suite, environment={
        "seed": seed,
        "suites": list(names),
        "samplers": {"padic_grid_depth": 3, "real_min_gap": 1e-6, "parameters": params},
        "tolerances": {"float_relative_slack": FLOAT_SLACK, "identity_relative": glue_re.REL_TOL,
                       "Mn_safety_factor": glue_re.SAFETY_FACTOR},
    })
    for name in names:
        if name in ("glue_um", "glue_re"):
            key = "ultrametric" if name == "glue_um" else "real"
            if key not in config:
                continue
        for check, elapsed in run_suite(name, seed, config):
            report.add(check, elapsed)
    doc = report.to_dict()
    validate(doc, "report.schema.json")
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        _write(text, args.out)
    failures = report.failures()
    counts = doc["counts"]
    print(f"{args.suite}: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['inconclusive']} inconclusive (seed {seed})", file=sys.stderr)
    for c in failures:
        print(f"  FAIL {c.id}: {c.anchor}", file=sys.stderr)
    return 1 if failures else 0


def _read_points(path, exact: bool) -> list:
    with open(path) as fh:
        text = fh.read()
    try:
        raw = json.loads(text)
        if not isinstance(raw, list):
            raise CurveLabError("points file must hold a JSON list or one value per line")
    except json.JSONDecodeError:
        raw = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    out = []
    for x in raw:
        if isinstance(x, float) and not exact:
            out.append(x)
            continue
        try:
            out.append(Fraction(x))
        except (ValueError, TypeError):
            if exact:
                raise CurveLabError(f"p-adic points must be rationals, got {x!r}") from None
            out.append(float(x))
    return out


def cmd_glue(args) -> int:
    doc = read_json(args.config)
    if args.mode == "um":
        spec = parse_um_spec(doc.get("ultrametric", doc))
        g = glue_um.build(spec)
    else:
        spec = parse_re_spec(doc.get("real", doc))
        g = glue_re.build(spec)
    if args.table:
        Mn = glue_re.estimate_Mn(args.order) if args.mode == "re" else None
        if Mn is None:
            raise CurveLabError("--table is only available for --mode re")
        rows = glue_re.table_rows(g, args.order, Mn)
        with open(args.table, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]) if rows else ["n", "t_n", "r_n"])
            w.writeheader()
            w.writerows(rows)
    points = _read_points(args.points, exact=args.mode == "um") if args.points else []
    lines = []
    header = ["x"] + (["gamma"] if g.dim == 1 else [f"gamma_{i + 1}" for i in range(g.dim)])
    lines.append(",".join(header))
    for x in points:
        v = g.value(x)
        lines.append(",".join([format_scalar(x)] + [format_scalar(c) for c in v]))
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_leibniz(args) -> int:
    if args.order < 1:
        raise CurveLabError("order must be at least 1")
    f = expand(args.order)
    C = constants(f).C
    total = f.coefficient_sum
    bound = 2**args.order
    table = {"order": f.order, "terms": f.to_json(), "coefficient_sum": total, "bound": bound,
             "bound_holds": total <= bound, "C": list(C), "C_sum": sum(C)}
    text = f.render() + "\n"
    text += f"terms: {len(f.terms)}  sum N = {total} <= 2^{f.order} = {bound}: {total <= bound}\n"
    text += "C_k: " + " ".join(f"C_{k}={c}" for k, c in enumerate(C)) + "\n"
    text += json.dumps(table, indent=2) + "\n"
    _write(text, args.out)
    return 0


def cmd_diffquot(args) -> int:
    if args.config:
        doc = read_json(args.config)
        field = parse_field(doc.get("field", {"kind": "archimedean"}))
        curve = parse_curve(doc["curve"], field)
    else:
        if not args.poly:
            raise CurveLabError("give --config or --poly")
        field = parse_field({"kind": "padic", "p": args.prime} if args.prime else {"kind": "archimedean"})
        curve = parse_curve({"poly": [c.strip() for c in args.poly.split(",")]}, field)
    if args.points:
        pts = [Fraction(x.strip()) for x in args.points.split(",")]
    else:
        raise CurveLabError("give --points")
    k = args.order if args.order is not None else len(pts) - 1
    if len(pts) == 1 and k > 0:
        v = diff_quot_coincident(curve, k, pts[0])
        mode = "coincident"
    else:
        v = diff_quot(curve, k, pts)
        mode = "tuple"
    out = {"order": k, "points": [format_scalar(x) for x in pts], "mode": mode,
           "value": [format_scalar(c) for c in v.coords]}
    _write(json.dumps(out) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="curvelab", description="Difference quotients, gauges and curve gluing.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write a JSON report")
    v.add_argument("--config", help="config JSON (default: bundled default config)")
    v.add_argument("--suite", default="all", help=f"all or a comma list of: {', '.join(SUITES)}")
    v.add_argument("--seed", type=int, help="seed (fallback: CURVELAB_SEED, then the config)")
    v.add_argument("--out", help="report path (default: no report file)")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("glue", help="evaluate a glued curve at points, as CSV")
    g.add_argument("--mode", choices=("um", "re"), required=True)
    g.add_argument("--config", required=True, help="glue data, or a verify config holding it")
    g.add_argument("--points", help="JSON list or one value per line")
    g.add_argument("--out", help="CSV path (default: stdout)")
    g.add_argument("--table", help="also write the per-piece table as CSV (re mode)")
    g.add_argument("--order", type=int, default=3, help="highest order in the table")
    g.set_defaults(func=cmd_glue)

    lz = sub.add_parser("leibniz", help="print the product-rule expansion")
    lz.add_argument("--order", type=int, required=True)
    lz.add_argument("--out")
    lz.set_defaults(func=cmd_leibniz)

    d = sub.add_parser("diffquot", help="evaluate one difference quotient")
    d.add_argument("--config", help='JSON {"field": ..., "curve": ...}')
    d.add_argument("--poly", help="comma list of coefficients, constant term first")
    d.add_argument("--prime", type=int, help="work p-adically with this prime")
    d.add_argument("--points", help="comma list; a single point with --order k uses the symbolic path")
    d.add_argument("--order", type=int)
    d.add_argument("--out")
    d.set_defaults(func=cmd_diffquot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CurveLabError as exc:
        print(f"curvelab: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"curvelab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
