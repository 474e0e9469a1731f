import csv
import json
import subprocess
import sys

import numpy as np
import pytest

from gaussbeta.cli import run
from gaussbeta.mn_criteria import ProblemConfig, log_mn


def gb(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "gaussbeta", *map(str, args)], capture_output=True, text=True, cwd=cwd)


def parse_document(text):
    out = {}
    for line in text.strip().splitlines():
        key, value = line.split(" = ")
        out[key] = value
    return out


def test_advise_evenly_spaced():
    res = gb("advise", "--criterion", "evenly-spaced", "--space", "B", "--b0", 1, "--delta", 0.03, "--sigma", 1)
    assert res.returncode == 0, res.stderr
    doc = parse_document(res.stdout)
    assert float(doc["beta_star"]) == pytest.approx(0.0075, rel=1e-14)
    assert doc["clamped"] == "false"
    assert set(doc) >= {"beta_star", "beta_unconstrained", "log_beta0", "clamped", "log_mn_at_star"}


def test_advise_infeasible_exit_2():
    res = gb("advise", "--criterion", "scattered", "--space", "B", "--n", 1, "--b0", 1, "--delta", 0.3, "--sigma", 1)
    assert res.returncode == 2
    assert "delta exceeds delta_n = 0.25" in res.stderr


def test_constants_gamma():
    res = gb("constants", "--n", 2, "--b0", 1, "--beta", 1)
    assert res.returncode == 0
    doc = parse_document(res.stdout)
    assert doc["gamma_n"] == "12"
    assert all(k.startswith("log_") for k in doc if "C_" in k or "c2" in k or "delta0" in k)


@pytest.mark.parametrize(
    "args",
    [
        ["frobnicate"],
        ["advise", "--wat", "1"],
        ["advise", "--space", "Q", "--delta", "0.01"],
        ["advise"],  # delta missing
        ["constants", "--n", "1", "--b0", "1"],  # beta missing
        ["advise", "--delta", "-0.1"],
        ["constants", "--n", "70", "--b0", "1", "--beta", "1"],
    ],
)
def test_invalid_input_exit_2(args):
    assert run(args) == 2


def test_runtime_failure_exit_1(tmp_path, capsys):
    code = run(["curve", "--criterion", "evenly-spaced", "--delta", "0.03", "--out", str(tmp_path / "no" / "x.csv")])
    assert code == 1
    assert "no" in capsys.readouterr().err


def test_curve_roundtrip(tmp_path):
    out = tmp_path / "curve.csv"
    res = gb("curve", "--criterion", "evenly-spaced", "--space", "G", "--delta", 0.03, "--count", 25, "--out", out)
    assert res.returncode == 0, res.stderr
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["beta", "log_mn"]
    assert len(rows) == 26
    cfg = ProblemConfig(1, 1.0, 0.03, 1.0, "G", "evenly-spaced")
    for beta, value in rows[1:]:
        assert log_mn(cfg, float(beta)) == float(value)


def test_nodes_csv():
    res = gb("nodes", "--n", 2, "--degree", 3)
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "x1,x2"
    assert len(lines) == 11


def test_nodes_with_vertices_from_config(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"vertices": [[0.0], [2.0]], "degree": 4}))
    res = gb("nodes", "--config", cfg)
    assert res.returncode == 0, res.stderr
    xs = sorted(float(v) for v in res.stdout.split()[1:])
    assert xs == [0.0, 0.5, 1.0, 1.5, 2.0]


def test_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"criterion": "evenly-spaced", "space": "B", "delta": 0.2, "b0": 1, "sigma": 1}))
    doc = parse_document(gb("advise", "--config", cfg).stdout)
    assert doc["clamped"] == "true"
    doc = parse_document(gb("advise", "--config", cfg, "--delta", 0.03).stdout)
    assert float(doc["beta_star"]) == pytest.approx(0.0075)
    cfg.write_text(json.dumps({"bogus": 1}))
    assert gb("advise", "--config", cfg).returncode == 2


def test_interp_files(tmp_path):
    nodes = tmp_path / "nodes.csv"
    x = np.linspace(0, 1, 9)
    nodes.write_text("x1,y\n" + "".join(f"{float(a)!r},{float(np.cos(a))!r}\n" for a in x))
    points = tmp_path / "points.csv"
    points.write_text("x1\n" + "".join(f"{float(a)!r}\n" for a in x))
    out = tmp_path / "out.csv"
    res = gb("interp", "--beta", 50, "--nodes", nodes, "--points", points, "--out", out)
    assert res.returncode == 0, res.stderr
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["x1", "s"]
    got = np.array([float(r[1]) for r in rows[1:]])
    np.testing.assert_allclose(got, np.cos(x), atol=1e-9)


def test_experiment_writes_report(tmp_path):
    out = tmp_path / "exp.csv"
    res = gb("experiment", "--criterion", "evenly-spaced", "--delta", 0.05, "--beta-min", 1e-3, "--beta-max", 10, "--count", 6, "--out", out)
    assert res.returncode == 0, res.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "beta,empirical_sup_error,log_mn,log_bound,flag"
    assert len(lines) == 7
    assert "argmin_empirical" in res.stdout
