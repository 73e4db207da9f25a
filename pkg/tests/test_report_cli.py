import json
import subprocess
import sys
from fractions import Fraction

import pytest

from kummer_tori.cli import main
from kummer_tori.exact import Quad
from kummer_tori.report import Case, SuiteReport, emit_report, render
from kummer_tori.suites import SUITES, run_suite


def test_render_exact_values():
    assert render(Fraction(-2, 3)) == "-2/3"
    assert render(Quad(1, 2, -3)) == "1+2*sqrt(-3)"
    assert render([1, (True, None)]) == ["1", [True, None]]


def test_case_status():
    assert Case("a", "x", 1, 1).status == "pass"
    assert Case("a", "x", 1, 2).status == "fail"
    with pytest.raises(ValueError):
        Case("a", "x", 1, 1, status="maybe")


def test_empty_report_is_valid_json():
    doc = json.loads(emit_report(SuiteReport("ideban", 0), "json"))
    assert doc == {"suite": "ideban", "seed": 0, "cases": []}


def test_failing_case_carries_both_values():
    rep = SuiteReport("t", 1)
    rep.add("x", "anchor", Fraction(1, 2), Quad(0, 1, -1))
    doc = json.loads(emit_report(rep, "json"))
    assert doc["cases"][0] == {"id": "x", "anchor": "anchor", "expected": "1/2",
                               "actual": "0+1*sqrt(-1)", "status": "fail"}
    text = emit_report(rep, "text")
    assert "expected=1/2" in text and "actual=0+1*sqrt(-1)" in text


def test_timing_only_on_request():
    rep = run_suite("example-5-4")
    assert "elapsed_ms" not in json.loads(emit_report(rep, "json"))
    assert "elapsed_ms" in json.loads(emit_report(rep, "json", timing=True))


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report(SuiteReport("x", 0), "xml")


def test_run_suite_validation():
    with pytest.raises(ValueError):
        run_suite("nope")
    with pytest.raises(ValueError):
        run_suite("ideban", {"colour": 1})


def test_cases_sorted_and_filtered():
    rep = run_suite("ideban", {"cases": "k01-*"})
    ids = [c.id for c in rep.cases]
    assert ids == sorted(ids) and ids and all(i.startswith("k01-") for i in ids)


def test_same_seed_same_bytes():
    a = emit_report(run_suite("hodge", {"count": 3, "seed": 9}), "json")
    b = emit_report(run_suite("hodge", {"count": 3, "seed": 9}), "json")
    assert a == b


def test_double_factorial_suite():
    rep = run_suite("ideban", {"kmax": 6, "nmax": 8})
    assert rep.ok and len(rep.cases) == 294


def test_theta_suite_reports_computed_triple():
    rep = run_suite("theta", {"n": 2, "cases": "n2-triple"})
    (case,) = rep.cases
    assert case.actual == (-1, -3, 3)


def test_all_prefixes_suite_names():
    rep = run_suite("all", {"cases": "example-5-4/*"})
    assert rep.cases and all(c.id.startswith("example-5-4/") for c in rep.cases)
    assert set(SUITES) >= {"ideban", "weil", "ring-selftest"}


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["--suite", "example-5-4"]) == 0
    assert main(["--suite", "theta", "--n", "2", "--cases", "n2-triple"]) == 1
    out = tmp_path / "r.json"
    assert main(["--suite", "divisors", "--e-range", "1..3", "--format", "json",
                 "--out", str(out), "--cases", "div*"]) == 0
    doc = json.loads(out.read_text())
    assert doc["suite"] == "divisors" and len(doc["cases"]) == 12


def test_cli_bad_arguments(capsys):
    with pytest.raises(SystemExit):
        main(["--suite", "bogus"])
    with pytest.raises(SystemExit):
        main(["--e-range", "0..3"])


def test_cli_unwritable_out(tmp_path, capsys):
    assert main(["--suite", "example-5-4", "--out", str(tmp_path / "no" / "x.json")]) == 2
    assert "cannot write" in capsys.readouterr().err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "kummer_tori", "--suite", "example-5-4",
                          "--format", "json"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["suite"] == "example-5-4"
