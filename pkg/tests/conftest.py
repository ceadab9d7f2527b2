import json
from importlib import resources

import pytest


@pytest.fixture(scope="session")
def default_config_path():
    return str(resources.files("curvelab").joinpath("data", "default.json"))


@pytest.fixture(scope="session")
def adversarial_config_path():
    return str(resources.files("curvelab").joinpath("data", "adversarial.json"))


@pytest.fixture(scope="session")
def default_config(default_config_path):
    with open(default_config_path) as fh:
        return json.load(fh)


_ACCEPTANCE_LINES: list = []


@pytest.fixture
def acceptance_log(request):
    """Record one pass/fail line per acceptance criterion; printed in the terminal summary."""
    def log(label: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
        status = "PASS" if ok and elapsed < limit else "FAIL"
        line = f"{status}  {label}  ({elapsed:.2f}s, limit {limit:g}s){'  ' + detail if detail else ''}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return status == "PASS"
    return log


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
