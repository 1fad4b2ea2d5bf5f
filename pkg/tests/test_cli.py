import csv
import io
import json

import pytest

from contpaths.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def record(*argv):
    code, out, err = call(*argv)
    assert code == EXIT_OK, err
    return json.loads(out)


def test_cbinom():
    r = record("cbinom", "--x", "1", "--y", "1")
    assert r["value"] == pytest.approx(7.7404443, abs=1e-7)
    assert r["tail_bound"] >= 0


def test_paths():
    assert record("paths", "--q", "2,1")["count"] == "3"
    assert record("paths", "--q", "3,4")["count"] == "35"


def test_cmultinomial():
    r = record("cmultinomial", "--x", "1.0,2.0,0.5", "--cap", "40")
    assert set(r) >= {"value", "tail_bound", "cap"}
    assert r["cap"] == 40
    assert r["value"] > 6


def test_cmultinomial_methods_agree():
    a = record("cmultinomial", "--x", "1,2", "--cap", "40")["value"]
    b = record("cmultinomial", "--x", "1,2", "--cap", "40", "--method", "borel_route")["value"]
    c = record("cmultinomial", "--x", "1,2", "--method", "closed_form")["value"]
    assert a == pytest.approx(b, rel=1e-14) and a == pytest.approx(c, rel=1e-10)


def test_cmultinomial_small_cap_note():
    r = record("cmultinomial", "--x", "1,1,1", "--cap", "2")
    assert r["value"] == 0 and r["notes"]


def test_smirnov():
    assert record("smirnov", "--nu", "2,2") == {"command": "smirnov", "nu": [2, 2], "count": 2}
    r = record("smirnov", "--d", "2", "--n", "3")
    assert r["words"] == ["121", "212"] and r["count"] == 2


def test_volume():
    cd = record("volume", "--word", "1212", "--x", "1.0,2.0", "--measure", "cd")["value"]
    rm = record("volume", "--word", "1212", "--x", "1.0,2.0", "--measure", "riemannian")["value"]
    assert cd == pytest.approx(2.0) and rm == pytest.approx(4.0)


def test_todd():
    r = record("todd", "--n", "3", "--x", "7", "--variant", "two_sided")
    assert r["count"] == "15" and r["expected"] == "C(6,2)=15"
    assert record("todd", "--n", "2", "--x", "4", "--variant", "upper")["count"] == "6"


def test_pde_check():
    r = record("pde-check", "--d", "3", "--cap", "12")
    assert r["ok"] is True and r["trustworthy_degree"] == 6 and r["max_residual"] == "0"


def test_exact_values_are_strings():
    assert isinstance(record("todd", "--n", "1", "--x", "5")["count"], str)
    assert isinstance(record("pde-check", "--d", "2", "--cap", "6")["max_residual"], str)


def test_grid_csv():
    code, out, _ = call("cbinom", "--grid", "x=0.25:1:0.25,y=0.5:1:0.5", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 8
    assert [(float(r["x"]), float(r["y"])) for r in rows[:3]] == [(0.25, 0.5), (0.25, 1.0), (0.5, 0.5)]
    from contpaths.contcoeff import continuous_binomial_closed

    assert float(rows[0]["value"]) == continuous_binomial_closed(0.25, 0.5).value


def test_grid_cmultinomial():
    code, out, _ = call("cmultinomial", "--grid", "x1=0:1:1,x2=0:1:1,x3=0:0:1", "--format", "csv", "--cap", "20")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4
    assert float(rows[0]["value"]) == 6.0


def test_csv_float_precision():
    code, out, _ = call("cbinom", "--x", "1", "--y", "1", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["value"] == f"{float(row['value']):.17g}"
    assert len(row["value"].replace(".", "").lstrip("0")) == 17


def test_deterministic_output():
    for argv in (("cbinom", "--x", "0.3", "--y", "2.5"), ("pde-check", "--d", "2", "--cap", "8"), ("verify-all", "--quick")):
        assert call(*argv) == call(*argv)


def test_verify_all_quick():
    code, out, _ = call("verify-all", "--quick")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 10
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_verify_all_reports_failure(monkeypatch):
    import contpaths.verify as verify

    monkeypatch.setitem(verify.CHECKS, "always fails", lambda quick: (False, "forced"))
    code, out, _ = call("verify-all", "--quick")
    assert code == EXIT_FAILED
    assert "FAIL  always fails" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("bogus",),
        ("paths",),
        ("paths", "--q", "2,x"),
        ("cbinom", "--x", "1"),
        ("cbinom", "--x", "-1", "--y", "1"),
        ("cbinom", "--grid", "x=1:0:1,y=1:2:1"),
        ("todd", "--n", "2", "--x", "4", "--bogus"),
        ("cmultinomial", "--x", "1"),
        ("volume", "--word", "1122", "--x", "1,1"),
    ],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_resource_limit_exit(monkeypatch):
    monkeypatch.setenv("CONTPATHS_MAX_TERMS", "10")
    code, _, err = call("cmultinomial", "--x", "1,1,1", "--cap", "33")
    assert code == EXIT_USAGE
    assert "CONTPATHS_MAX_TERMS" in err
