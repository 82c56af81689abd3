import csv
import io
import json

import pytest
from click.testing import CliRunner

from snmgeom.cli import cli
from snmgeom.mesh import parse_obj


@pytest.fixture
def runner():
    return CliRunner()


def test_curvature_cylinder_csv(runner):
    res = runner.invoke(cli, ["curvature", "--surface", "cylinder", "--grid", "10x10"])
    assert res.exit_code == 0, res.output
    rows = list(csv.DictReader(io.StringIO(res.output)))
    assert len(rows) == 100
    assert all(float(r["K"]) == 0.5 for r in rows)


def test_curvature_json_and_params(runner):
    res = runner.invoke(cli, ["curvature", "--surface", "sphere", "--param", "r=2",
                              "--grid", "3x2", "--format", "json"])
    assert res.exit_code == 0, res.output
    data = json.loads(res.output)
    assert len(data) == 6 and data[2]["status"] == "ok"
    assert data[0]["status"] == "degenerate" and data[0]["K"] is None


def test_curvature_bad_inputs(runner):
    assert runner.invoke(cli, ["curvature", "--C", "0,0,0"]).exit_code != 0
    assert runner.invoke(cli, ["curvature", "--C", "1,2"]).exit_code != 0
    assert runner.invoke(cli, ["curvature", "--surface", "nope"]).exit_code != 0
    assert runner.invoke(cli, ["curvature", "--grid", "1x5"]).exit_code != 0
    assert runner.invoke(cli, ["curvature", "--param", "r"]).exit_code != 0


def test_config_file_and_flag_override(runner, tmp_path):
    cfg = tmp_path / "run.toml"
    cfg.write_text('surface = "torus"\ngrid = "3x3"\nC = "1,0,0"\n[params]\nR = 3.0\n')
    res = runner.invoke(cli, ["curvature", "--config", str(cfg)])
    assert res.exit_code == 0, res.output
    assert len(res.output.strip().splitlines()) == 10
    res = runner.invoke(cli, ["curvature", "--config", str(cfg), "--grid", "2x2"])
    assert len(res.output.strip().splitlines()) == 5
    x0 = float(res.output.splitlines()[1].split(",")[2])
    assert x0 == pytest.approx(3.5)


@pytest.mark.parametrize("args,has_curve", [
    (["cylindrical", "--K", "1"], True),
    (["rotational", "--x-max", "1.5"], True),
    (["graph", "--c", "1"], False),
])
def test_generate(runner, tmp_path, args, has_curve):
    out = tmp_path / "m"
    res = runner.invoke(cli, ["generate", *args, "--grid", "6x5", "--out", str(out)])
    assert res.exit_code == 0, res.output
    mesh = parse_obj((tmp_path / "m.obj").read_text())
    assert len(mesh.vertices) == 30 and len(mesh.faces) == 40
    assert (tmp_path / "m.csv").exists() == has_curve
    if has_curve:
        header = (tmp_path / "m.csv").read_text().splitlines()[0]
        assert header == "s,x,z,zp,kappa"


def test_generate_cylindrical_K1_band(runner, tmp_path):
    res = runner.invoke(cli, ["generate", "cylindrical", "--K", "1", "--out", str(tmp_path / "b")])
    assert res.exit_code == 0
    rows = list(csv.DictReader(io.StringIO((tmp_path / "b.csv").read_text())))
    s = [float(r["s"]) for r in rows]
    assert -0.6232 < min(s) < -0.62 and 0.62 < max(s) < 0.6232


def test_generate_errors(runner, tmp_path):
    out = str(tmp_path / "e")
    assert runner.invoke(cli, ["generate", "cylindrical", "--out", out]).exit_code != 0
    assert runner.invoke(cli, ["generate", "graph", "--c", "0.5", "--out", out]).exit_code != 0
    assert runner.invoke(cli, ["generate", "rotational", "--branch", "plus", "--x-max", "1.5",
                               "--out", out]).exit_code != 0


def test_verify_single_suite(runner):
    res = runner.invoke(cli, ["verify", "thm4.4", "--seed", "7"])
    assert res.exit_code == 0, res.output
    data = json.loads(res.output)
    assert {d["anchor"] for d in data} == {"thm4.4"}
    assert all(d["status"] == "pass" for d in data)
    assert "runtime" not in data[0]


def test_verify_exit_status_reflects_failures(runner):
    res = runner.invoke(cli, ["verify", "thm4.5"])
    data = json.loads(res.stdout)
    failed = [d for d in data if d["status"] == "fail"]
    assert (res.exit_code != 0) == bool(failed)


def test_verify_unknown_suite(runner):
    assert runner.invoke(cli, ["verify", "thm9.9"]).exit_code == 2
