import json
import subprocess
import sys

import pytest

from agcodes.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, out


def run_json(capsys, *argv):
    status, out = run(capsys, *argv)
    return status, json.loads(out)


def test_curve(capsys):
    status, out = run_json(capsys, "curve", "--p", "3", "--e", "1", "--s", "2")
    assert status == 0
    assert out == {"q": 3, "s": 2, "genus": 1, "affine_points": 15, "total": 16, "maximal": True}
    _, out = run_json(capsys, "curve", "--p", "5", "--s", "3")
    assert out["total"] == 66 and out["maximal"]
    status, out = run_json(capsys, "curve", "--p", "5", "--s", "4")
    assert status == 1 and "error" in out


def test_code(capsys, tmp_path):
    path = tmp_path / "g.txt"
    status, out = run_json(capsys, "code", "--p", "3", "--s", "2", "--m", "4", "--export", str(path))
    assert status == 0
    assert (out["n"], out["k"], out["designed_d"]) == (15, 4, 11)
    assert set(out) == {"n", "k", "d", "d_exact", "designed_d", "self_orthogonal", "paper_case", "agrees_with_paper"}
    assert path.read_text().splitlines()[0] == "9 15 4"
    _, out = run_json(capsys, "code", "--p", "3", "--s", "2", "--m", "-1")
    assert out["k"] == 0
    _, out = run_json(capsys, "code", "--p", "5", "--s", "3", "--m", "6", "--distance", "bound")
    assert out["agrees_with_paper"] is False and out["d_exact"] is False
    status, out = run_json(capsys, "code", "--p", "5", "--s", "3", "--m", "18", "--distance", "exhaustive")
    assert status == 1 and out["guard"] == 10**7


def test_scan(capsys):
    status, out = run(capsys, "scan", "--p", "3", "--s", "2", "--m-max", "16")
    lines = out.splitlines()
    assert status == 0
    assert lines[0] == "m,k,designed_d,self_orthogonal,paper_predicts"
    assert len(lines) == 18
    predicts = [ln.split(",")[4] == "true" for ln in lines[1:]]
    assert predicts == [m <= 7 for m in range(17)]


def test_quantum(capsys):
    status, out = run_json(capsys, "quantum", "--p", "3", "--s", "2", "--m", "0")
    assert status == 0 and out["logical"] == 13 and out["commutes"]
    assert {"n", "logical", "d_lower", "exact", "q", "source_m"} <= set(out)
    status, out = run_json(capsys, "quantum", "--p", "3", "--s", "2", "--m", "14")
    assert status == 1 and out["failed_gram_entries"] > 0


def test_simulate_is_deterministic(capsys):
    args = ["simulate", "--p", "3", "--s", "2", "--m", "0", "--prob", "0.3", "--trials", "50", "--seed", "4"]
    _, a = run(capsys, *args)
    _, b = run(capsys, *args)
    assert a == b
    rep = json.loads(a)
    assert rep["channel"]["rng"] == "numpy.random.PCG64"
    _, out = run_json(capsys, "simulate", "--p", "3", "--s", "2", "--m", "4", "--prob", "0", "--trials", "20")
    assert out["word_errors"] == 0


def test_table_flag(capsys):
    status, out = run(capsys, "curve", "--p", "3", "--s", "2", "--table")
    assert status == 0 and "maximal" in out and not out.startswith("{")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "agcodes", "curve", "--p", "3", "--s", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["affine_points"] == 15


def test_bad_subcommand():
    with pytest.raises(SystemExit):
        main(["bogus"])
