import json

import pytest
from click.testing import CliRunner

from gspcheck.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_enumerate_json(runner):
    res = runner.invoke(main, ["enumerate", "--n", "3"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert [d["label"] for d in data["elliptic_data"]] == ["GSp_6", "G(Sp_2xSO_4)", "GSO_6"]
    assert len(data["cuspidal_levis"]) == 6
    levi = next(M for M in data["cuspidal_levis"] if (M["r"], M["t"], M["m"]) == (1, 0, 2))
    assert [t["H"] for t in levi["triples"]] == ["GSp_6", "G(Sp_2xSO_4)", "GSO_6"]


def test_enumerate_table(runner):
    res = runner.invoke(main, ["enumerate", "--n", "2", "--format", "table"])
    assert res.exit_code == 0
    assert "GSO_4" in res.output and "iota=1/4" in res.output


def test_satake_outputs(runner):
    res = runner.invoke(main, ["satake", "--n", "2", "--a", "1", "--K", "1,2", "--format", "table"])
    assert res.exit_code == 0
    assert res.output.splitlines() == [
        "1 * p^3 * X^-1 * X1^0 * X2^0",
        "-1 * p^3 * X^-1 * X1^0 * X2^1",
        "-1 * p^3 * X^-1 * X1^1 * X2^0",
        "1 * p^3 * X^-1 * X1^1 * X2^1",
    ]
    data = json.loads(runner.invoke(main, ["satake", "--n", "1", "--a", "2", "--K", "1"]).output)
    assert data["K"] == [1] and [m["coef"] for m in data["monomials"]] == ["1", "-1"]


@pytest.mark.parametrize("K", ["3", "x,1"])
def test_satake_rejects_bad_K(runner, K):
    assert runner.invoke(main, ["satake", "--n", "2", "--a", "1", "--K", K]).exit_code == 2


def test_kostant_outputs(runner):
    res = runner.invoke(main, ["kostant", "--n", "1", "--S", "1", "--weight", "[0,0]"])
    assert res.exit_code == 0
    pieces = json.loads(res.output)["pieces"]
    assert [(p["degree"], p["kept_by_truncation"]) for p in pieces] == [(0, True), (1, False)]
    below = runner.invoke(main, ["kostant", "--n", "1", "--S", "1", "--weight", "[0,0]", "--direction", "below", "--format", "table"])
    assert below.exit_code == 0
    assert below.output.splitlines()[1].split()[:3] == ["0", "1", "no"]


@pytest.mark.parametrize(
    "args",
    [
        ["--S", "1", "--weight", "[0,1]"],
        ["--S", "1", "--weight", "[0,0,-2]"],
        ["--S", "1", "--weight", "[0,0,0]", "--lam0", "[2,0,0]"],
        ["--S", "5", "--weight", "[0,0,0]"],
    ],
)
def test_kostant_rejects_bad_input(runner, args):
    assert runner.invoke(main, ["kostant", "--n", "2"] + args).exit_code == 2


def test_verify_exit_codes(runner):
    ok = runner.invoke(main, ["verify", "--suite", "satake", "--n-max", "2", "--samples", "2"])
    assert ok.exit_code == 0
    assert json.loads(ok.output)["passed"] is True
    bad = runner.invoke(main, ["verify", "--suite", "endoscopy", "--n-max", "2", "--samples", "2"])
    assert bad.exit_code == 1
    report = json.loads(bad.output)
    failing = sorted(c["id"] for c in report["checks"] if c["first_counterexample"] is not None)
    assert failing == ["endoscopy.n_MH_H", "root_data.rho_mu_pairing"]


def test_verify_is_byte_identical(runner, tmp_path):
    args = ["verify", "--suite", "appendix", "--n-max", "2", "--samples", "5", "--seed", "7"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert runner.invoke(main, args + ["--out", str(a)]).exit_code == 0
    assert runner.invoke(main, args + ["--out", str(b)]).exit_code == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["config"] == {"suite": "appendix", "n_max": 2, "samples": 5, "seed": 7}


def test_verify_timing_and_table(runner, tmp_path):
    res = runner.invoke(main, ["verify", "--suite", "satake", "--n-max", "2", "--samples", "1", "--timing"])
    assert all(isinstance(c["wall_time"], float) for c in json.loads(res.output)["checks"])
    plain = json.loads(runner.invoke(main, ["verify", "--suite", "satake", "--n-max", "2", "--samples", "1"]).output)
    assert all(c["wall_time"] is None for c in plain["checks"])
    out = tmp_path / "t.txt"
    res = runner.invoke(main, ["verify", "--suite", "satake", "--n-max", "2", "--format", "table", "--out", str(out)])
    text = out.read_text()
    assert res.exit_code == 0 and "\x1b[" not in text
    assert text.rstrip().endswith("all checks passed")


def test_no_color_strips_styles(runner):
    args = ["verify", "--suite", "satake", "--n-max", "1", "--format", "table"]
    colored = runner.invoke(main, args, color=True)
    assert "\x1b[" in colored.output
    plain = runner.invoke(main, args, color=True, env={"NO_COLOR": "1"})
    assert "\x1b[" not in plain.output and "PASS" in plain.output


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--suite", "nope"],
        ["verify", "--n-max", "0"],
        ["verify", "--seed", "-1"],
        ["verify", "--samples", "-3"],
        ["enumerate", "--n", "0"],
    ],
)
def test_usage_errors(runner, args):
    assert runner.invoke(main, args).exit_code == 2
