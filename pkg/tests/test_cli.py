import io
import pathlib
import subprocess
import sys

import pytest

from fuzzyhybrid.cli import main

DEMOS = pathlib.Path(__file__).resolve().parent.parent / "demos"


def cli(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_run_half():
    assert cli("run", DEMOS / "half.gfps") == (
        0,
        "halted=true steps=1 result=5/2 (2.5) strong=5/2\n",
    )


def test_run_json():
    code, text = cli("run", DEMOS / "half.gfps", "--json")
    assert code == 0 and text.count("\n") == 1 and '"result":"5/2"' in text


def test_run_budget_exit_code():
    code, text = cli("run", DEMOS / "loop.gfps", "--max-steps", "5")
    assert code == 2 and text.startswith("halted=false steps=5")


def test_check_ok_and_duplicate(tmp_path, capsys):
    assert cli("check", DEMOS / "half.gfps") == (0, "ok\n")
    bad = tmp_path / "dup.gfps"
    bad.write_text("frame unit output 1\nmembrane 1 {\n membrane 1 { }\n}\n")
    code, _ = cli("check", bad)
    assert code == 1
    assert f"{bad}:3:2: error: duplicate label" in capsys.readouterr().err


def test_alpha():
    assert cli("alpha", DEMOS / "cut.gfps", "--region", "1", "--alpha", "1/2") == (0, "a*3\n")


def test_alpha_malformed_degree(capsys):
    code, _ = cli("alpha", DEMOS / "cut.gfps", "--alpha", "3/2")
    assert code == 1 and "malformed degree" in capsys.readouterr().err


def test_card():
    assert cli("card", DEMOS / "negative.gfps", "--region", "2") == (0, "-3/4 (-0.75)\n")
    assert cli("card", DEMOS / "negative.gfps", "--region", "2", "--strong") == (0, "3/4 (0.75)\n")


def test_unknown_region(capsys):
    code, _ = cli("card", DEMOS / "half.gfps", "--region", "9")
    assert code == 1 and "unknown region 9" in capsys.readouterr().err


def test_unreadable_file(capsys):
    code, _ = cli("check", "/nonexistent/x.gfps")
    assert code == 1 and "cannot read" in capsys.readouterr().err


def test_usage_error():
    assert cli("frobnicate")[0] == 1
    assert cli("alpha", DEMOS / "cut.gfps")[0] == 1


def test_outcomes():
    code, text = cli("outcomes", DEMOS / "choice.gfps")
    assert code == 0
    assert text.splitlines() == [
        "2 outcome(s)",
        "[1] {}; [2] b@1*1",
        "[1] {}; [2] c@1*2",
    ]


def test_outcomes_limit(capsys):
    code, _ = cli("outcomes", DEMOS / "choice.gfps", "--limit", "1")
    assert code == 1 and "limit of 1" in capsys.readouterr().err


def test_laws():
    code, text = cli("laws", DEMOS / "powerset.gfps")
    assert code == 0
    lines = text.splitlines()
    assert lines and all(l.startswith("PASS ") for l in lines)


def test_trace_goes_to_stderr():
    proc = subprocess.run(
        [sys.executable, "-m", "fuzzyhybrid", "run", str(DEMOS / "chain.gfps"), "--trace"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "halted=true steps=2 result=4 (4) strong=4\n"
    assert "step 1 membrane 1" in proc.stderr and "step 2 membrane 2" in proc.stderr


@pytest.mark.parametrize("seed", ["0", "7"])
def test_byte_identical_runs(seed):
    args = [sys.executable, "-m", "fuzzyhybrid", "run", str(DEMOS / "choice.gfps"), "--seed", seed]
    a = subprocess.run(args, capture_output=True)
    b = subprocess.run(args, capture_output=True)
    assert a.stdout == b.stdout and a.returncode == b.returncode == 0


@pytest.mark.parametrize("script", sorted(DEMOS.glob("*.py")), ids=lambda p: p.name)
def test_demo_scripts_run(script):
    proc = subprocess.run([sys.executable, str(script)], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
