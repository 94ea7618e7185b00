import json
import subprocess
import sys
from math import gcd
from pathlib import Path

import pytest

from tritotient.cli import main, run

DATA = Path(__file__).parent / "data"


def out(argv):
    res = run(argv)
    assert res.status == 0, res.error
    return res.render(res.json)


@pytest.mark.parametrize("argv, expected", [
    (["word", "4", "5"], "2,2,2,2\n"),
    (["word", "4", "5", "--runs"], "2^4\n"),
    (["sigma", "8", "17"], "9\n"),
    (["enumerate", "5", "--count-only"], "4\n"),
    (["enumerate", "5"], "2,2,2,2\n2,3\n3,2\n5\n"),
    (["residue", "2,3"], "2 5\n"),
    (["powersum", "4", "5", "1"], "8\n"),
    (["cfrac", "4", "5"], "1,4\n"),
    (["catalan", "4", "--count-only"], "14\n"),
    (["classes", "5"], "2,2,2,2\n2,3 3,2\n5\n"),
    (["latnorm", "2,3,4"], "2\n"),
])
def test_commands(argv, expected):
    assert out(argv) == expected


def test_sigma_table_golden():
    assert out(["sigma-table", "17"]) == (DATA / "sigma_table_17.txt").read_text()


def test_json_mode():
    lines = out(["--json", "enumerate", "5"]).splitlines()
    assert [json.loads(x)["word"] for x in lines] == [[2, 2, 2, 2], [2, 3], [3, 2], [5]]
    assert json.loads(out(["sigma", "8", "17", "--json"])) == {"a": 8, "N": 17, "sigma": 9}


def test_levelset_and_hull(tmp_path):
    f = tmp_path / "p3.txt"
    f.write_text("3\n0 1 0\n1 0 1\n0 1 0\n")
    assert out(["levelset", str(f), "1"]) == "1,2,2\n1,3,1\n2,1,3\n2,2,1\n3,1,2\n"
    text = out(["hull", str(f), "1"])
    assert "facet x + y + z >= 5 : 1,2,2 1,3,1 2,2,1" in text
    assert text.startswith("dim 3\n")


def test_deterministic_output(tmp_path):
    assert out(["classes", "60"]) == out(["classes", "60"])


@pytest.mark.parametrize("argv", [
    ["word", "2", "4"],
    ["sigma", "0", "5"],
    ["residue", "1,3"],
    ["latnorm", "2,2,2,2,2,2,2,2,2"],
    ["levelset", "/nonexistent/file", "1"],
    ["enumerate", "1"],
])
def test_precondition_errors(argv, capsys):
    assert main(argv) == 2
    err = capsys.readouterr().err
    assert err.startswith("error: ") and err.count("\n") == 1


def test_verify_exit_codes(monkeypatch, capsys):
    from tritotient import suites
    from tritotient.polytope import VerificationReport

    assert main(["verify", "p3"]) == 0
    assert "p3: PASS" in capsys.readouterr().out

    def broken():
        rep = VerificationReport("broken")
        rep.fail("boom")
        return rep

    monkeypatch.setitem(suites.SUITES, "p3", broken)
    assert main(["verify", "p3"]) == 1


def test_word_residue_roundtrip():
    for N in range(2, 101):
        for a in range(1, N):
            if gcd(a, N) == 1:
                w = out(["word", str(a), str(N)]).strip()
                assert out(["residue", w]) == f"{a} {N}\n"


def test_bench_powersum():
    lines = out(["bench-powersum", "16"]).splitlines()
    assert lines and all("fast=" in x for x in lines)
    assert "agree=False" not in "".join(lines)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tritotient", "word", "3", "7"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "2,2,3\n"
