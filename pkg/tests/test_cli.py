import json
import subprocess
import sys

import pytest

from jmhomology import cli, engine
from jmhomology.errors import InvariantViolation, NonPolynomialResult
from jmhomology.symbolic import LaurentPoly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_text(capsys):
    assert run(capsys, "compute", "--n", "1") == (0, "1 + a\n", "")
    code, out, _ = run(capsys, "compute", "--n", "2", "--jm", "0")
    assert (code, out) == (0, "1 + 2*a + a^2\n")


def test_compute_both_reports_agreement(capsys):
    code, out, _ = run(capsys, "compute", "--n", "3", "--jm", "1,2", "--method", "both")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("syt: ") and lines[1].startswith("residue: ")
    assert lines[0][5:] == lines[1][9:]
    assert lines[2] == "agree: yes"


def test_compute_json_roundtrip_is_byte_identical(capsys):
    code, out, _ = run(capsys, "compute", "--n", "2", "--jm", "1", "--format", "json", "--method", "both")
    assert code == 0
    doc = json.loads(out)
    assert cli.dumps(doc) + "\n" == out
    assert doc["agree"] is True
    assert {"coeff": "1", "a": 1, "Q": 0, "T": 0} in doc["terms"]
    assert {"coeff": "-1", "a": 0, "Q": 1, "T": 1} in doc["terms"]


def test_compute_qt_grading(capsys):
    code, out, _ = run(capsys, "compute", "--n", "2", "--jm", "1", "--grading", "qt", "--format", "json")
    terms = json.loads(out)["terms"]
    assert code == 0
    assert all(set(t) == {"coeff", "a", "q", "t"} for t in terms)
    assert {"coeff": "-1", "a": 0, "q": 0, "t": 2} in terms


def test_compute_latex(capsys):
    code, out, _ = run(capsys, "compute", "--n", "2", "--jm", "0", "--format", "latex")
    assert (code, out) == (0, "1 + 2 a + a^{2}\n")


def test_audit_is_empty(capsys):
    code, out, err = run(capsys, "compute", "--n", "3", "--jm", "2,1", "--audit", "--format", "json")
    assert code == 0 and err == ""
    assert json.loads(out)["audit"] == []


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--n", "3", "--jm", "1"],
        ["compute", "--n", "2", "--jm", "x"],
        ["compute", "--n", "0"],
        ["compute", "--n", "2", "--jm", "1", "--method", "magic"],
        ["frobnicate", "--n", "2"],
        ["compute"],
        ["check", "--n", "2", "--threads", "-1"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("usage error")


def test_nonpolynomial_exits_2(capsys, monkeypatch):
    def boom(e, **kw):
        raise NonPolynomialResult("left over (1-Q)", [])

    monkeypatch.setattr(engine, "evaluate_full", boom)
    code, out, err = run(capsys, "compute", "--n", "2", "--jm", "1")
    assert code == 2 and out == "" and "non-polynomial" in err


def test_invariant_violation_exits_3(capsys, monkeypatch):
    def bad(e, **kw):
        raise InvariantViolation("broken")

    monkeypatch.setattr(engine, "evaluate_full", bad)
    assert run(capsys, "compute", "--n", "2", "--jm", "1")[0] == 3


def test_disagreement_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(engine, "evaluate_full", lambda e, **kw: LaurentPoly.constant(5))
    code, out, err = run(capsys, "compute", "--n", "2", "--jm", "1", "--method", "both")
    assert code == 3 and "agree: NO" in out and "disagree" in err


def test_charts(capsys):
    code, out, _ = run(capsys, "charts", "--n", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 6 and len(doc["charts"]) == 6
    assert cli.dumps(doc) + "\n" == out
    code, out, _ = run(capsys, "charts", "--n", "2")
    assert json.loads(out)["count"] == 2
    code, out, _ = run(capsys, "charts", "--n", "2", "--format", "text")
    assert out.splitlines()[0] == "NS_2: 2 charts"


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", "--n", "2")
    assert code == 0
    assert out.splitlines()[-1] == "all properties pass"
    code, out, _ = run(capsys, "check", "--n", "2", "--format", "json")
    assert json.loads(out)["pass"] is True


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("JMH_THREADS", "3")
    assert cli.parse_config(["check", "--n", "2"]).threads == 3
    assert cli.parse_config(["check", "--n", "2", "--threads", "2"]).threads == 2
    monkeypatch.setenv("JMH_THREADS", "many")
    with pytest.raises(cli.UsageError):
        cli.parse_config(["check", "--n", "2"])


def test_scan_json(capsys):
    code, out, _ = run(capsys, "scan", "--n", "2", "--jm", "0", "--k-max", "1", "--m-max", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["points"]) == 4
    assert cli.dumps(doc) + "\n" == out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jmhomology", "compute", "--n", "1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "1 + a\n"
