"""Command-line interface: exit codes, formats, determinism."""

import json

from click.testing import CliRunner

from mckaylab.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args), catch_exceptions=False)


def test_verify_single_cell_table():
    res = run("verify", "--n", "2", "--q", "3", "--eps", "+1", "--ell", "2")
    assert res.exit_code == 0
    assert "ellprime=4/4" in res.output
    assert "pairs=5/5" in res.output


def test_verify_rejects_ell_dividing_q():
    res = run("verify", "--n", "2", "--q", "3", "--ell", "3")
    assert res.exit_code == 2
    assert "divides" in res.output


def test_verify_requires_cell_or_grid():
    res = run("verify", "--n", "2")
    assert res.exit_code == 2


def test_verify_json_schema_and_determinism():
    args = ("verify", "--n", "2", "--q", "2", "--eps", "-1", "--ell", "3",
            "--format", "json")
    out1 = run(*args)
    out2 = run(*args)
    assert out1.exit_code == 0
    assert out1.output == out2.output
    reports = json.loads(out1.output)
    assert len(reports) == 1
    rep = reports[0]
    assert rep["cell"] == {"kind": "GU", "n": 2, "q": 2, "eps": -1, "ell": 3}
    assert rep["ms"] is None
    assert rep["checks"]["bijective"] is True


def test_verify_grid_file(tmp_path):
    grid = tmp_path / "cells.json"
    grid.write_text(json.dumps([[2, 1, 3, 2], [2, -1, 2, 3]]))
    res = run("verify", "--grid", str(grid), "--no-oracle")
    assert res.exit_code == 0
    assert len(res.output.strip().splitlines()) == 2


def test_verify_bad_grid_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    res = run("verify", "--grid", str(bad))
    assert res.exit_code == 2


def test_oracle_command():
    res = run("oracle", "--kind", "SL", "--n", "2", "--q", "3")
    assert res.exit_code == 0
    assert "order 24" in res.output
    assert "classes 7" in res.output
    assert "1 1 1 2 2 2 3" in res.output


def test_oracle_json_with_ellprime():
    res = run("oracle", "--kind", "GL", "--n", "2", "--q", "3",
              "--ell", "2", "--format", "json")
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["order"] == 48
    assert payload["ellprime"] == 4


def test_oracle_usage_errors():
    assert run("oracle", "--kind", "GL", "--n", "4", "--q", "7").exit_code == 2
    assert run("oracle", "--kind", "GL", "--n", "2", "--q", "3",
               "--ell", "3").exit_code == 2


def test_gggr_parity():
    res = run("gggr", "--n", "12", "--check", "parity")
    assert res.exit_code == 0
    assert "12" in res.output


def test_gggr_gamma_conj_single_lambda():
    res = run("gggr", "--n", "2", "--q", "3", "--lambda", "2",
              "--check", "gamma-conj")
    assert res.exit_code == 0
    assert "witness found" in res.output


def test_gggr_needs_q_for_group_checks():
    res = run("gggr", "--n", "2", "--check", "gamma-conj")
    assert res.exit_code == 2


def test_gggr_rejects_bad_lambda():
    res = run("gggr", "--n", "3", "--q", "2", "--lambda", "2,2",
              "--check", "gamma-conj")
    assert res.exit_code == 2


def test_gggr_mult_one_json():
    res = run("gggr", "--n", "2", "--q", "2", "--check", "mult-one",
              "--format", "json")
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["all_covered"] is True
    assert payload["multiplicities"]["2"] == [1, 0, 1]
    assert payload["status"] == "ok"


def test_gggr_hom_check():
    res = run("gggr", "--n", "2", "--q", "2", "--lambda", "2",
              "--check", "hom")
    assert res.exit_code == 0
    assert "pairs" in res.output


def test_output_file(tmp_path):
    out = tmp_path / "report.json"
    res = run("verify", "--n", "2", "--q", "3", "--eps", "+1", "--ell", "2",
              "--format", "json", "--out", str(out))
    assert res.exit_code == 0
    assert json.loads(out.read_text())[0]["status"] == "ok"
