import json
import subprocess
import sys

import pytest

from canonzeta import cli, elliptic
from canonzeta.canonical import sigma_c, tau
from canonzeta.commrep import DepthTuple
from canonzeta.ncwords import GENUS1, NCPoly


def run(capsys, *args):
    code = cli.run(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coeff_example(capsys):
    code, out, _ = run(capsys, "coeff", "--object", "sigma", "--weight", "5", "--composition", "5")
    assert code == 0
    assert out.strip() == "1"


def test_verify_pollack_example(capsys):
    code, out, _ = run(capsys, "verify", "pollack", "--weight", "12")
    assert code == 0
    assert "FAIL" not in out


def test_sigma_json_round_trip(capsys):
    code, out, _ = run(capsys, "sigma", "--weight", "13", "--max-depth", "3",
                       "--normalization", "canonical", "--format", "json")
    assert code == 0
    t = DepthTuple.from_json(out)
    assert t == sigma_c(6, 3)
    assert t.weight == 13 and t.normalization == "canonical"


def test_format_before_verb(capsys):
    code, out, _ = run(capsys, "--format", "json", "tau", "--max-weight", "8")
    assert code == 0
    assert DepthTuple.from_json(out) == tau(8)


def test_epsilon_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "epsilon", "--index", "6")
    data = json.loads(out)
    assert code == 0
    assert NCPoly.from_json(data["a"], GENUS1) == elliptic.epsilon(2).image_first
    assert NCPoly.from_json(data["b"], GENUS1) == elliptic.epsilon(2).image_second


def test_dims_kernel(capsys):
    code, out, _ = run(capsys, "--format", "json", "dims", "kernel", "--weight-range", "10:24")
    rows = {r["weight"]: r["dim"] for r in json.loads(out)["rows"]}
    assert code == 0
    assert rows[12] == 1 and rows[24] == 2 and rows[10] == 0


def test_dims_ls_text(capsys):
    code, out, _ = run(capsys, "dims", "ls", "--weight-range", "11:13", "--depth", "3")
    assert code == 0
    assert out.split() == ["11", "1", "12", "0", "13", "2"]


def test_periodpoly_and_cuspidal(capsys):
    code, out, _ = run(capsys, "--format", "json", "periodpoly", "--weight", "12", "--even")
    assert code == 0 and len(json.loads(out)["basis"]) == 1
    code, out, _ = run(capsys, "--format", "json", "cuspidal", "--weight", "12")
    data = json.loads(out)
    assert code == 0 and data["elements"][0]["polefree"]


@pytest.mark.parametrize("verb", [
    ["verify", "ds", "--weight", "7"],
    ["verify", "ds", "--object", "tau", "--weight", "10"],
    ["verify", "lift", "--weight", "5"],
    ["verify", "polefree", "--weight", "9"],
    ["verify", "chi", "--weight", "7"],
    ["verify", "pls", "--weight", "10"],
    ["z3"],
    ["xi", "--weight", "5"],
])
def test_verbs_succeed(capsys, verb):
    assert run(capsys, *verb)[0] == 0


@pytest.mark.parametrize("args", [
    ["sigma"],
    ["sigma", "--weight", "4"],
    ["coeff", "--object", "sigma", "--weight", "5", "--composition", "2,2"],
    ["dims", "ls", "--weight-range", "9"],
    ["nonsense"],
    ["epsilon", "--index", "3"],
])
def test_usage_errors(capsys, args):
    assert run(capsys, *args)[0] == 2


def test_verification_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(elliptic, "lift_theorem_check", lambda n: False)
    code, out, _ = run(capsys, "verify", "lift", "--weight", "5")
    assert code == 1
    assert "FAIL" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "canonzeta", "coeff", "--object", "sigma",
                           "--weight", "5", "--composition", "5"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
    proc = subprocess.run([sys.executable, "-m", "canonzeta", "sigma"], capture_output=True, text=True)
    assert proc.returncode == 2
