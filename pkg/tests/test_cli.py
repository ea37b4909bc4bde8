import io
import json
import os
import subprocess
import sys

import pytest

from eqspringer import cli
from eqspringer.cli import main
from eqspringer.combinatorics import Permutation


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_fixed_points():
    assert run("fixed-points", "--lambda", "2,1") == (0, "123\n132\n312\n")
    assert run("fixed-points", "--lambda", "3,2,1", "--count-only") == (0, "60\n")


def test_export_wn():
    code, text = run("export-wn", "--lambda", "7,5,2,2")
    assert code == 0
    assert text.splitlines()[0] == "1 2 3 8 4 9 5 10 6 11 13 15 7 12 14 16"
    assert "refinement: pass" in text


def test_verify_all_passes():
    code, text = run("verify", "--lambda", "3,2,1", "--suite", "all")
    assert code == 0
    data = json.loads(text)
    assert data["verdict"] == "pass"
    assert [s["suite"] for s in data["suites"]] == ["vanishing", "action", "diagram", "schur"]


def test_generators_formats():
    code, text = run("generators", "--lambda", "2,1", "--kind", "equivariant", "--format", "cas")
    assert code == 0 and len(text.splitlines()) == 7
    code, text = run("generators", "--lambda", "2", "--kind", "classical", "--format", "json")
    assert json.loads(text)["generators"][0]["poly"] == "y1"
    code, text = run("generators", "--lambda", "2", "--kind", "flag", "--format", "cas")
    assert text.splitlines()[1:] == ["y1 + y2 - t1 - t2", "y1*y2 - t1*t2"]


def test_restrict_and_act():
    code, text = run("restrict", "--lambda", "2,1", "--poly", "y1")
    assert json.loads(text)["values"] == {"123": "u1", "132": "u1", "312": "u2"}
    assert run("act", "--lambda", "2", "--perm", "21", "--poly", "y1 - u1") == (0, "y2 - u1\n")


def test_hilbert_and_rank():
    code, text = run("hilbert", "--lambda", "1,1,1")
    assert code == 0 and json.loads(text)["dims"] == [1, 2, 2, 1]
    code, text = run("rank", "--lambda", "2,2", "--seed", "1")
    data = json.loads(text)
    assert code == 0 and data["achieved_rank"] == 6 and data["seed"] == 1


def test_schur():
    code, text = run("schur", "--shape", "1,1", "--s", "2", "--alphabet", "u")
    data = json.loads(text)
    assert code == 0 and data["equal"] is True
    assert data["tableau_form"] == "y1*y2 - u1*y1 - u1*y2 + u1^2"
    code, text = run("schur", "--shape", "1", "--s", "2", "--alphabet", "u1,u1,u2")
    assert json.loads(text)["tableau_form"] == "y1 + y2 - 2*u1"
    code, text = run("schur", "--shape", "2,1", "--s", "2", "--alphabet", "t")
    assert code == 0 and json.loads(text)["equal"] is None


@pytest.mark.parametrize("argv", [
    ["fixed-points", "--lambda", "1,2"],
    ["fixed-points"],
    ["restrict", "--lambda", "2,1", "--poly", "y1 +"],
    ["restrict", "--lambda", "2,1", "--poly", "t1"],
    ["act", "--lambda", "2,1", "--perm", "12", "--poly", "y1"],
    ["hilbert", "--lambda", "1,1,1,1,1,1,1"],
    ["schur", "--shape", "1", "--s", "2", "--alphabet", "x1"],
    ["generators", "--lambda", "2", "--kind", "bogus"],
    ["nonsense"],
])
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv, out=io.StringIO())
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_max_n_override():
    assert run("hilbert", "--lambda", "1,1,1,1,1,1,1", "--max-n", "7")[0] == 0


def test_verification_failure_exits_1(monkeypatch):
    monkeypatch.setattr(cli, "build_w_refinement", lambda lam: Permutation.parse("213"))
    assert run("export-wn", "--lambda", "2,1")[0] == 1


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "eqspringer", "rank", "--lambda", "3,1,1", "--seed", "4"]
    env = dict(os.environ, PYTHONHASHSEED="random")
    outs = {subprocess.run(argv, capture_output=True, text=True, env=env, check=True).stdout for _ in range(2)}
    assert len(outs) == 1
    argv = [sys.executable, "-m", "eqspringer", "verify", "--lambda", "2,2", "--seed", "3"]
    outs = {subprocess.run(argv, capture_output=True, text=True, env=env, check=True).stdout for _ in range(2)}
    assert len(outs) == 1
