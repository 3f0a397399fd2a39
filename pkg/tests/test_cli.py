import json
import os
import subprocess
import sys

import pytest

from qdouble import cli
from qdouble.suites import FAIL, PASS, SKIPPED, SUITES, Skip, _run_task, run_suite, worker_count


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("expr, want", [
    ("sigma(x[1,2], x[2,1])", "z*(q - q^-1)"),
    ("nf(x[2,2]x[1,1])", "x[1,1]x[2,2] + (q - q^-1) * x[1,2]x[2,1]"),
    ("eval(E[1], x[1,2])", "q - q^-1"),
    ("S(x[1,2])", "-q * x[1,2] * det^-1"),
])
def test_eval(capsys, expr, want):
    code, out, _ = run(capsys, "eval", expr)
    assert code == 0 and out.strip() == want


def test_eval_parse_error(capsys):
    code, _, err = run(capsys, "eval", "x[1,2")
    assert code == 2 and "position 5" in err


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "eval(E[1], x[1,2])", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["kind"] == "scalar" and doc["result"] == "q - q^-1"


def test_list_suites(capsys):
    code, out, _ = run(capsys, "list-suites")
    assert code == 0 and out.split() == list(SUITES)


def test_suite_json_is_deterministic(capsys):
    a = run(capsys, "suite", "yang_baxter", "--format", "json")
    b = run(capsys, "suite", "yang_baxter", "--format", "json")
    assert a == b
    doc = json.loads(a[1])
    assert doc["schema"] == 1 and doc["passed"] and a[0] == 0
    assert [c["status"] for c in doc["checks"]] == [PASS] * len(doc["checks"])


def test_suite_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "qdouble.cli", "suite", "det_grouplike_central", "--format", "json", "--n", "3"]
    a = subprocess.run(cmd, capture_output=True, env={**os.environ, "QDOUBLE_THREADS": "1"})
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0 and a.stdout == b.stdout


def test_failing_suite_exit_code(capsys):
    code, out, _ = run(capsys, "suite", "braided_crosscheck")
    assert code == 1
    assert "FAILED: braided_crosscheck" in out


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_bad_n(capsys):
    code, _, err = run(capsys, "eval", "q", "--n", "1")
    assert code == 2


def test_braided_both(capsys):
    code, out, _ = run(capsys, "braided", "mul", "x[1,1]", "x[1,1]")
    assert code == 0 and "verdict: agree" in out
    code, out, _ = run(capsys, "braided", "comul", "x[1,2]", "--form", "both", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["agree"] and doc["closed"] == doc["general"]


def test_braided_general_only(capsys):
    code, out, _ = run(capsys, "braided", "act", "l[2,1]", "x[1,2]", "--form", "general")
    assert code == 0 and out.startswith("general:")


def test_braided_closed_needs_generator(capsys):
    code, _, err = run(capsys, "braided", "antipode", "x[1,1]x[1,2]", "--form", "closed")
    assert code == 2 and "single generator" in err


def test_dmul(capsys):
    code, out, _ = run(capsys, "dmul", "E[1] (x) x[1,1]", "x[2,2]", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["terms"] == [["l_inv[2]*l[2,1]", "x[1,1]x[2,2]", "1"]]


# ---------------------------------------------------------------- runner

def test_run_suite_errors():
    with pytest.raises(ValueError):
        run_suite("nope", 2)
    with pytest.raises(ValueError):
        run_suite("yang_baxter", 1)


def test_task_outcomes():
    def boom():
        raise ZeroDivisionError("inverse of zero")

    def skip():
        raise Skip("not here")

    assert _run_task(("a", lambda: (True, "ok"))).status == PASS
    assert _run_task(("b", lambda: (False, "witness"))).detail == "witness"
    crashed = _run_task(("c", boom))
    assert crashed.status == FAIL and crashed.detail == "ZeroDivisionError: inverse of zero"
    assert _run_task(("d", skip)).status == SKIPPED


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("QDOUBLE_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("QDOUBLE_THREADS", "x")
    with pytest.raises(ValueError):
        worker_count()


def test_report_order_is_registration_order(monkeypatch):
    monkeypatch.setenv("QDOUBLE_THREADS", "4")
    a = run_suite("yang_baxter", 2).to_dict()
    monkeypatch.setenv("QDOUBLE_THREADS", "1")
    b = run_suite("yang_baxter", 2).to_dict()
    assert a == b
