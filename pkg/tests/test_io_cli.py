import json
import subprocess
import sys

import pytest

from curvelab import cli
from curvelab.errors import ConfigError
from curvelab.io import load_config, parse_curve, parse_re_spec, parse_um_spec, validate
from curvelab.scalar import QQ, Qp


def run(*args, env=None):
    return subprocess.run([sys.executable, "-m", "curvelab.cli", *args], capture_output=True, text=True, env=env)


def test_load_and_parse_default(default_config_path):
    doc = load_config(default_config_path)
    um = parse_um_spec(doc["ultrametric"])
    re_ = parse_re_spec(doc["real"])
    assert len(um.pieces) == 8 and um.field == Qp(3)
    assert len(re_.pieces) == 6


def test_schema_rejects_unknown_keys(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"seed": 1, "bogus": True}))
    with pytest.raises(ConfigError):
        load_config(p)


def test_malformed_json(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(p)


def test_parse_curve_rules():
    c = parse_curve({"translate": {"poly": ["0", "1"]}, "t0": "2"}, QQ)
    assert c.value(1) == (3,)
    s = parse_curve({"sum": [{"poly": ["1"]}, {"scale": {"poly": ["0", "1"]}, "a": "3"}]}, QQ)
    assert s.value(2) == (7,)
    e = parse_curve({"extend_by_zero": {"poly": ["1"], "domain": {"ball": {"radius": "1/3"}}}}, Qp(3))
    assert e.value(1) == (0,) and e.value(3) == (1,)
    with pytest.raises(ConfigError):
        parse_curve({"spline": []}, QQ)


def test_verify_default_exits_zero(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    validate(doc, "report.schema.json")
    assert doc["verdict"] == "pass" and doc["counts"]["fail"] == 0


def test_verify_adversarial_exits_one(adversarial_config_path):
    assert cli.main(["verify", "--config", adversarial_config_path, "--suite", "glue_um,glue_re"]) == 1


def _strip_timing(doc):
    for c in doc["checks"]:
        c.pop("timing", None)
    return doc


def test_reports_are_seed_deterministic(tmp_path):
    paths = [tmp_path / f"r{i}.json" for i in range(3)]
    cli.main(["verify", "--suite", "scalar,leibniz", "--seed", "7", "--out", str(paths[0])])
    cli.main(["verify", "--suite", "scalar,leibniz", "--seed", "7", "--out", str(paths[1])])
    cli.main(["verify", "--suite", "scalar,leibniz", "--seed", "8", "--out", str(paths[2])])
    a, b, c = (_strip_timing(json.loads(p.read_text())) for p in paths)
    assert a == b
    assert c["environment"]["seed"] == 8


def test_seed_precedence(monkeypatch):
    monkeypatch.setenv("CURVELAB_SEED", "11")
    assert cli.resolve_seed(None, {"seed": 3}) == 11
    assert cli.resolve_seed(5, {"seed": 3}) == 5
    monkeypatch.delenv("CURVELAB_SEED")
    assert cli.resolve_seed(None, {"seed": 3}) == 3
    assert cli.resolve_seed(None, {}) == 0
    monkeypatch.setenv("CURVELAB_SEED", "x")
    assert cli.main(["verify", "--suite", "scalar"]) == 2


def test_bad_config_exits_two(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    assert cli.main(["verify", "--config", str(p)]) == 2
    assert cli.main(["verify", "--suite", "nope"]) == 2
    assert cli.main(["leibniz", "--order", "0"]) == 2


def test_glue_um_csv(tmp_path, default_config_path):
    pts = tmp_path / "pts.json"
    pts.write_text(json.dumps(["4", "0", "1/2"]))
    out = tmp_path / "g.csv"
    assert cli.main(["glue", "--mode", "um", "--config", default_config_path, "--points", str(pts),
                     "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines == ["x,gamma", "4,9", "0,0", "1/2,0"]


def test_glue_re_csv_and_table(tmp_path, default_config_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("5/2\n11/4\n100\n")
    out, table = tmp_path / "g.csv", tmp_path / "t.csv"
    assert cli.main(["glue", "--mode", "re", "--config", default_config_path, "--points", str(pts),
                     "--out", str(out), "--table", str(table), "--order", "2"]) == 0
    lines = out.read_text().splitlines()
    assert lines[1] == "5/2,0" and lines[3] == "100,0"
    assert table.read_text().startswith("n,t_n,r_n")


def test_leibniz_and_diffquot_commands(capsys):
    assert cli.main(["leibniz", "--order", "2"]) == 0
    text = capsys.readouterr().out
    assert "sum N = 3 <= 2^2 = 4: True" in text
    assert cli.main(["diffquot", "--poly", "0,0,0,1", "--points", "0,1,2"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == ["3"]
    assert cli.main(["diffquot", "--poly", "0,0,0,1", "--points", "1", "--order", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["mode"] == "coincident"
    assert cli.main(["diffquot", "--poly", "0,1", "--prime", "3", "--points", "0,9"]) == 0


def test_module_entry_point():
    r = run("leibniz", "--order", "1")
    assert r.returncode == 0 and "g<1>" in r.stdout
