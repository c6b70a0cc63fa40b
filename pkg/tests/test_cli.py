import io
import subprocess
import sys

import pytest

import sslevel.rationality as rat
from sslevel.cli import main
from sslevel.errors import MethodDisagreement
from sslevel.tables import APPENDIX_A, Row


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_ss_poly_factored():
    code, out, _ = run("ss-poly", "--p", "19", "--level", "2", "--factored")
    assert code == 0
    assert out == "(x + 1) * (x + 7) * (x + 11) * (x^2 + 9*x + 11)\n"


def test_ss_poly_expanded_and_forms():
    outs = {run("ss-poly", "--p", "13", "--level", "2", "--form", f)[1] for f in "egh"}
    assert len(outs) == 1


def test_ss_poly_tsv():
    code, out, _ = run("--tsv", "ss-poly", "--p", "29", "--level", "2", "--factored")
    fields = out.rstrip("\n").split("\t")
    assert code == 0
    assert fields[:3] == ["29", "2", "E"]
    assert fields[5:] == ["3", "2"]


def test_genus():
    code, out, _ = run("genus", "--curve", "2+")
    assert code == 0
    assert "genus 0" in out.splitlines()
    assert "fixed points: w_2 2" in out
    _, tsv, _ = run("--tsv", "genus", "--curve", "11-")
    assert tsv == "11-\t1\t12\t0\t0\t2\t1\n"


def test_rationality():
    code, out, _ = run("rationality", "--curve", "2+")
    assert code == 0
    assert "rationality primes: 3, 5, 7, 11, 13, 17, 19, 23, 31, 47" in out
    assert "note:" in out


def test_verify_table3():
    code, out, _ = run("verify", "--suite", "table3")
    assert code == 0
    lines = out.splitlines()
    assert sum(line.startswith("PASS") for line in lines) == 28
    assert lines[-1] == "28 passed, 0 failed"


@pytest.mark.parametrize("suite", ["appendixD", "appendixE", "table2", "moonshine"])
def test_verify_fast_suites(suite):
    code, out, _ = run("verify", "--suite", suite)
    assert code == 0
    assert "FAIL" not in out


def test_qexp():
    code, out, _ = run("qexp", "--eta", "1^24/2^24", "--prec", "2")
    assert (code, out) == (0, "q^-1 - 24 + 276*q + O(q^2)\n")
    _, tsv, _ = run("--tsv", "qexp", "--eta", "1^24", "--prec", "3")
    assert tsv == "1\t1\n2\t-24\n"


def test_deterministic_output():
    a = run("rationality", "--curve", "3-", "--bound", "50")
    b = run("rationality", "--curve", "3-", "--bound", "50")
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["ss-poly", "--p", "19"],
        ["ss-poly", "--p", "x", "--level", "2"],
        ["ss-poly", "--p", "19", "--level", "11"],
        ["ss-poly", "--p", "5", "--level", "10"],
        ["genus", "--curve", "12+2"],
        ["verify", "--suite", "nope"],
        ["qexp", "--eta", "1^1", "--prec", "3"],
        ["qexp", "--eta", "1^24", "--prec", "0"],
        ["rationality", "--curve", "2+", "--bound", "0"],
    ],
)
def test_usage_errors_exit_1(argv):
    code, out, err = run(*argv)
    assert code == 1
    assert err.startswith("error [")


def test_fixture_mismatch_exits_2(monkeypatch):
    fake = dict(APPENDIX_A)
    fake["3-"] = Row("test", "3-", (2, 5))
    monkeypatch.setattr(rat, "APPENDIX_A", fake)
    code, out, err = run("verify", "--suite", "appendixA")
    assert code == 2
    assert "FAIL  appendixA 3-" in out
    assert "FixtureMismatch" in err


def test_invariant_violation_exits_3(monkeypatch):
    def boom(*args, **kwargs):
        raise MethodDisagreement("forced")

    monkeypatch.setattr("sslevel.cli.rationality_primes", boom)
    code, _, err = run("rationality", "--curve", "2-")
    assert code == 3
    assert "MethodDisagreement" in err


def test_console_module_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "sslevel.cli", "genus", "--curve", "2-"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "genus 0" in proc.stdout
