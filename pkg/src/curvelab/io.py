"""JSON loading: schema validation and construction of fields, gauges, curves and glue data."""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

import jsonschema

from .diffquot import (ExtendByZero, PAdicBall, Polynomial, Product, RealInterval, Restrict, Scale, Sum,
                       Translate, WholeField)
from .errors import ConfigError, CurveLabError, SpecError
from .gauges import (AbsGauge, ConstantCalibration, PNormGauge, PowerCalibration, ScaledGauge,
                     ShiftedCalibration, SumGauge)
from .glue_re import Bump, Cutoff, RealGlueSpec, TailRule
from .glue_um import HypothesisProbe, UltrametricGlueSpec
from .scalar import QQ, FieldContext, Qp, parse_scalar


def load_schema(name: str) -> dict:
    text = resources.files("curvelab").joinpath("schemas", name).read_text()
    return json.loads(text)


def validate(doc, schema_name: str, definition: str | None = None) -> None:
    schema = load_schema(schema_name)
    if definition is not None:
        schema = {"$ref": f"#/$defs/{definition}", "$defs": schema["$defs"]}
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"{where}: {exc.message}") from None


def read_json(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: malformed JSON ({exc})") from None
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from None


def real_number(x):
    """Rational strings and ints stay exact; JSON floats stay floats."""
    if isinstance(x, float):
        return x
    return parse_scalar(x)


def parse_field(d) -> FieldContext:
    if d.get("kind") == "padic":
        return Qp(int(d["p"]))
    return QQ


def parse_gauge(d):
    rule = d["rule"]
    if rule == "abs":
        return AbsGauge()
    if rule == "p_norm":
        return PNormGauge(parse_scalar(d.get("r", "1")))
    if rule == "scaled":
        return ScaledGauge(parse_gauge(d["base"]), real_number(d.get("factor", "1")))
    if rule == "sum":
        return SumGauge(tuple(parse_gauge(p) for p in d["parts"]))
    raise ConfigError(f"unknown gauge rule {rule!r}")


def parse_calibration(d):
    law = d.get("factor_law", "constant")
    if law == "constant":
        return ConstantCalibration(parse_gauge(d["base"]), d.get("kind", "ordinary"))
    if law == "pow2_over_r":
        return PowerCalibration(parse_gauge(d["base"]), parse_scalar(d.get("r", "1")), d.get("kind", "strong"))
    if law == "shifted":
        return ShiftedCalibration(parse_calibration(d["inner"]), int(d.get("n0", 0)),
                                  real_number(d.get("scale", "1")))
    raise ConfigError(f"unknown calibration law {law!r}")


def parse_domain(d, field: FieldContext):
    if "ball" in d:
        b = d["ball"]
        return PAdicBall(parse_scalar(b.get("center", "0")), parse_scalar(b["radius"]), field)
    if "interval" in d:
        lo, hi = d["interval"]
        return RealInterval(real_number(lo), real_number(hi), field)
    return WholeField(field)


def parse_curve(d, field: FieldContext, domain=None):
    """Build a curve from its rule tree; ``domain`` is the default for polynomial leaves."""
    if "domain" in d:
        domain = parse_domain(d["domain"], field)
    if domain is None:
        domain = WholeField(field)
    if "poly" in d:
        rows = d["poly"]
        if rows and isinstance(rows[0], list):
            return Polynomial(tuple(tuple(parse_scalar(a) for a in row) for row in rows), domain)
        return Polynomial.scalar([parse_scalar(a) for a in rows], domain)
    if "translate" in d:
        return Translate(parse_curve(d["translate"], field), field.coerce(real_number(d["t0"])))
    if "scale" in d:
        return Scale(parse_curve(d["scale"], field), field.coerce(real_number(d["a"])))
    if "restrict" in d:
        return Restrict(parse_curve(d["restrict"], field), domain)
    if "extend_by_zero" in d:
        return ExtendByZero(parse_curve(d["extend_by_zero"], field, domain))
    if "product" in d:
        g, e = d["product"]
        return Product(parse_curve(g, field, domain), parse_curve(e, field, domain))
    if "sum" in d:
        return Sum(tuple(parse_curve(c, field, domain) for c in d["sum"]))
    if "cutoff" in d:
        return Cutoff(parse_scalar(d["cutoff"]["a"]), parse_scalar(d["cutoff"]["b"]))
    if "bump" in d:
        return Bump()
    raise ConfigError(f"unknown curve rule in {sorted(d)}")


def parse_probe(d) -> HypothesisProbe:
    if d is None:
        return HypothesisProbe()
    kw = {}
    if "a_values" in d:
        kw["a_values"] = tuple(parse_scalar(a) for a in d["a_values"])
    for key in ("k_max", "m_max", "l_max"):
        if key in d:
            kw[key] = int(d[key])
    if "C" in d:
        kw["C"] = parse_scalar(d["C"])
    if "threshold" in d:
        kw["threshold"] = float(d["threshold"])
    return HypothesisProbe(**kw)


def parse_um_spec(d) -> UltrametricGlueSpec:
    validate(d, "config.schema.json", "ultrametric")
    try:
        field = Qp(int(d["p"]))
        rho = parse_scalar(d["rho"])
        r = field.abs(rho)
        pieces = [parse_curve(c, field, PAdicBall(Fraction(0), r**n, field))
                  for n, c in enumerate(d.get("pieces", []), start=1)]
        cal = parse_calibration(d["calibration"]) if "calibration" in d else None
        return UltrametricGlueSpec(field, rho, pieces, cal, parse_probe(d.get("probe")))
    except CurveLabError:
        raise
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SpecError(str(exc)) from None


def parse_re_spec(d) -> RealGlueSpec:
    validate(d, "config.schema.json", "real")
    try:
        s = [parse_scalar(x) for x in d["s"]]
        given = [parse_scalar(x) for x in d["r"]] if "r" in d else None
        radii = given or [x + Fraction(2, n * n) for n, x in enumerate(s, start=1)]
        pieces = [parse_curve(c, QQ, RealInterval(-radii[n - 1], radii[n - 1]))
                  for n, c in enumerate(d.get("pieces", []), start=1)]
        cal = parse_calibration(d["calibration"]) if "calibration" in d else None
        tail = d.get("tail", {"rule": "zero"})
        return RealGlueSpec(s, pieces, given, cal, parse_probe(d.get("probe")),
                            TailRule(tail["rule"], parse_scalar(tail.get("ratio", "0"))))
    except CurveLabError:
        raise
    except (ValueError, TypeError, ZeroDivisionError, IndexError) as exc:
        raise SpecError(str(exc)) from None


def load_config(path) -> dict:
    doc = read_json(path)
    validate(doc, "config.schema.json")
    return doc
