"""Check results and verification reports."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .scalar import Scalar, format_scalar

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
VERDICTS = (PASS, FAIL, INCONCLUSIVE)

# Relative slack used whenever a float takes part in an inequality.
FLOAT_SLACK = 1e-9


def leq(a, b, slack: float = FLOAT_SLACK) -> bool:
    """``a <= b``, exactly for rationals and with relative slack for floats."""
    if isinstance(a, float) or isinstance(b, float):
        if math.isinf(b) and b > 0:
            return True
        return a <= b + slack * max(abs(a), abs(b))
    return a <= b


def jsonable(obj):
    """Convert witness data (Fractions, tuples, Scalars) into plain JSON."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Scalar):
        return format_scalar(obj.value)
    if isinstance(obj, Fraction):
        return format_scalar(obj)
    if isinstance(obj, float):
        if math.isfinite(obj):
            return obj
        return "inf" if obj > 0 else ("-inf" if obj < 0 else "nan")
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return str(obj)


def worst(verdicts) -> str:
    verdicts = list(verdicts)
    if FAIL in verdicts:
        return FAIL
    if INCONCLUSIVE in verdicts:
        return INCONCLUSIVE
    return PASS


@dataclass
class CheckResult:
    """Outcome of one verification check.

    ``anchor`` states the checked relation in mathematical notation so a
    failure can be traced to the exact inequality; infrastructure checks
    use the tag ``"plumbing"``.
    """

    id: str
    anchor: str
    verdict: str
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "verdict": self.verdict,
            "witness": jsonable(self.witness),
        }


def result(check_id: str, anchor: str, ok: bool, **witness) -> CheckResult:
    return CheckResult(check_id, anchor, PASS if ok else FAIL, witness)


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    environment: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def add(self, check: CheckResult, elapsed: float = 0.0) -> None:
        self.checks.append(check)
        self.timings[check.id] = elapsed

    @property
    def verdict(self) -> str:
        return worst(c.verdict for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.verdict == FAIL]

    def to_dict(self) -> dict:
        ordered = sorted(self.checks, key=lambda c: c.id)
        checks = []
        for c in ordered:
            d = c.to_dict()
            d["timing"] = round(self.timings.get(c.id, 0.0), 6)
            checks.append(d)
        counts = {v: sum(1 for c in ordered if c.verdict == v) for v in VERDICTS}
        return {
            "suite": self.suite,
            "verdict": self.verdict,
            "counts": counts,
            "environment": jsonable(self.environment),
            "checks": checks,
        }
