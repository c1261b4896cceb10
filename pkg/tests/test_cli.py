import csv
import io
import json
import math
import subprocess
import sys
from pathlib import Path
from xml.etree import ElementTree

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homspec.cli import main
from homspec.curves import CurveTable, read_csv, sample_grid, to_svg
from homspec.errors import DomainError

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


# curve tables

def test_curve_table_round_trip_is_bit_exact():
    xs = [0.1, 1 / 3, math.pi, 1e300]
    table = CurveTable("lambda", xs, {"exact": [1.0, 2 / 7, None, 5e-324], "bound": [math.e, 1e-17, 3.0, None]})
    back = read_csv(io.StringIO(table.to_csv()))
    assert back == table


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(allow_nan=False, allow_infinity=False), min_size=1, max_size=30, unique=True),
       st.data())
def test_curve_table_round_trip_property(xs, data):
    xs = sorted(xs)
    col = data.draw(st.lists(st.one_of(st.none(), st.floats(allow_nan=False, allow_infinity=False)),
                             min_size=len(xs), max_size=len(xs)))
    table = CurveTable("t", xs, {"v": col})
    assert read_csv(io.StringIO(table.to_csv())) == table


def test_curve_table_rejects_bad_data():
    with pytest.raises(DomainError):
        CurveTable("lambda", [1.0, 1.0])
    with pytest.raises(DomainError):
        CurveTable("lambda", [1.0, 2.0], {"a": [1.0]})
    with pytest.raises(DomainError):
        CurveTable("lambda", [1.0], {"a": [math.inf]})


def test_sample_grid():
    assert sample_grid(2.0, 2.0, 50) == [2.0]
    g = sample_grid(1.0, 100.0, 3, log=True)
    assert g[0] == 1.0 and g[-1] == 100.0 and g[1] == pytest.approx(10.0)
    with pytest.raises(DomainError):
        sample_grid(0.0, 1.0, 5, log=True)


def test_svg_is_well_formed_and_breaks_at_gaps():
    table = CurveTable("lambda", [1.0, 2.0, 3.0, 4.0, 5.0],
                       {"exact": [1.0, 2.0, 3.0, 4.0, 5.0], "bound": [None, 2.5, 3.5, None, 6.0]})
    svg = to_svg(table, title="demo")
    root = ElementTree.fromstring(svg)
    assert root.get("width") == "800" and root.get("height") == "600" and root.get("version") == "1.1"
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f"{ns}polyline")) == 2
    assert len(root.findall(f"{ns}circle")) == 1
    assert {t.text for t in root.findall(f"{ns}text")} >= {"exact", "bound", "demo", "lambda"}


# bound

def test_bound_s2_matches_closed_form(tmp_path, capsys):
    out = tmp_path / "out.csv"
    code, _, _ = run(capsys, "bound", "--space", "s2", "--lmin", "1", "--lmax", "50", "--points", "200",
                     "--method", "integral", "--csv", str(out))
    assert code == 0
    data = rows(out.read_text())
    assert len(data) == 200
    for r in data:
        lam = float(r["lambda"])
        want = (8 * lam - 2) / (4 * lam * math.sin(math.pi / (4 * math.sqrt(lam))) ** 2 - 1)
        assert float(r["bound"]) == pytest.approx(want, rel=1e-8)


def test_bound_h2_matches_closed_form(capsys):
    code, out, _ = run(capsys, "bound", "--space", "h2", "--lmin", "0.5", "--lmax", "50", "--points", "50")
    assert code == 0
    for r in rows(out):
        lam = float(r["lambda"])
        want = (4 * lam + 1) / (2 * math.pi * (4 * lam * math.sinh(math.pi / (4 * math.sqrt(lam))) ** 2 - 1))
        assert float(r["bound"]) == pytest.approx(want, rel=1e-8)


def test_bound_empty_range_gives_single_row(capsys):
    code, out, _ = run(capsys, "bound", "--space", "s2", "--lmin", "3", "--lmax", "3")
    assert code == 0
    assert len(rows(out)) == 1


def test_bound_poly_blank_below_validity(capsys):
    code, out, _ = run(capsys, "bound", "--space", "s2", "--lmin", "0.05", "--lmax", "1", "--points", "20",
                       "--method", "poly", "--r0", "2")
    assert code == 0
    threshold = (math.pi / 4) ** 2
    for r in rows(out):
        assert (r["bound"] == "") == (float(r["lambda"]) < threshold)


def test_bound_alpha_method_dominates_integral(capsys):
    _, integral, _ = run(capsys, "bound", "--space", "h3", "--lmin", "1", "--lmax", "30", "--points", "10")
    _, alpha, _ = run(capsys, "bound", "--space", "h3", "--lmin", "1", "--lmax", "30", "--points", "10",
                      "--method", "alpha")
    _, fixed, _ = run(capsys, "bound", "--space", "h3", "--lmin", "1", "--lmax", "30", "--points", "10",
                      "--method", "alpha", "--alpha", "0.5")
    for a, b, c in zip(rows(integral), rows(alpha), rows(fixed)):
        assert float(a["bound"]) <= float(b["bound"]) <= float(c["bound"]) * (1 + 1e-12)


def test_bound_writes_svg(tmp_path, capsys):
    svg = tmp_path / "plot.svg"
    code, _, _ = run(capsys, "bound", "--space", "ch2", "--lmin", "5", "--lmax", "40", "--points", "20",
                     "--svg", str(svg))
    assert code == 0
    ElementTree.fromstring(svg.read_text())


def test_tol_flag_accepted(capsys):
    code, out, _ = run(capsys, "bound", "--space", "s3", "--lmin", "1", "--lmax", "2", "--points", "2", "--tol", "1e-6")
    assert code == 0 and len(rows(out)) == 2


# compare

@pytest.mark.parametrize("space,lmin", [("circle", 0.5), ("s2", 1), ("s3", 1), ("h2", 0.5), ("h3", 0.5),
                                        ("h4", 0.5), ("h5", 0.5), ("h6", 0.5), ("h7", 0.5), ("ch2", 0.5),
                                        ("ch3", 0.5), ("ch4", 0.5), ("euclidean-2", 0.5)])
def test_compare_bound_above_exact(space, lmin, capsys):
    code, out, err = run(capsys, "compare", "--space", space, "--lmin", str(lmin), "--lmax", "50", "--points", "60")
    assert code == 0
    assert "min(bound - exact)" in err
    for r in rows(out):
        assert float(r["bound"]) - float(r["exact"]) >= -1e-9


def test_compare_circle_staircase(capsys):
    _, out, _ = run(capsys, "compare", "--space", "circle", "--lmin", str(math.pi**2), "--lmax", "400", "--points", "80")
    for r in rows(out):
        lam = float(r["lambda"])
        assert float(r["exact"]) == 2 * math.floor(math.sqrt(lam) / (2 * math.pi)) + 1


def test_compare_without_exact_is_usage_error(capsys):
    code, _, err = run(capsys, "compare", "--space", "h8", "--lmin", "1", "--lmax", "2")
    assert code == 2 and "no exact" in err


@pytest.mark.parametrize("name,lmin", [("s2", "1"), ("h2", "0.5")])
def test_compare_matches_golden(name, lmin, capsys):
    code, out, _ = run(capsys, "compare", "--space", name, "--lmin", lmin, "--lmax", "50", "--points", "200")
    assert code == 0
    golden = (GOLDEN / f"{name}_compare.csv").read_text()
    assert out.splitlines()[0] == golden.splitlines()[0]
    fresh, frozen = rows(out), rows(golden)
    assert len(fresh) == len(frozen) == 200
    for a, b in zip(fresh, frozen):
        assert a["lambda"] == b["lambda"]
        for col in ("exact", "bound"):
            assert float(a[col]) == pytest.approx(float(b[col]), rel=1e-12)
        assert float(b["bound"]) >= float(b["exact"]) - 1e-9


def test_compare_is_deterministic(capsys):
    argv = ("compare", "--space", "h2", "--lmin", "0.5", "--lmax", "50", "--points", "40")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


# heat

def test_heat_h3_exact_column(capsys):
    code, out, _ = run(capsys, "heat", "--space", "h3", "--tmin", "0.01", "--tmax", "100", "--points", "30", "--log")
    assert code == 0
    data = rows(out)
    assert set(data[0]) == {"t", "exact", "poly", "exp", "gap"}
    for r in data:
        t = float(r["t"])
        assert float(r["exact"]) == pytest.approx((4 * math.pi * t) ** -1.5 * math.exp(-t), rel=1e-9)
        for col in ("poly", "exp", "gap"):
            assert float(r[col]) >= float(r["exact"])


def test_heat_s2_bounds_dominate(capsys):
    code, out, _ = run(capsys, "heat", "--space", "s2", "--tmin", "0.01", "--tmax", "100", "--points", "30", "--log")
    assert code == 0
    for r in rows(out):
        assert float(r["poly"]) >= float(r["exact"]) and float(r["gap"]) >= float(r["exact"]) * (1 - 1e-12)


def test_heat_single_point(capsys):
    code, out, _ = run(capsys, "heat", "--space", "h5", "--tmin", "0.5", "--tmax", "0.5")
    assert code == 0 and len(rows(out)) == 1


# eigmin

def test_eigmin_s2(capsys):
    code, out, _ = run(capsys, "eigmin", "--space", "s2", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["li"] == pytest.approx(0.5)
    assert rep["li_improved"] == pytest.approx(2 / 3, abs=1e-12)
    assert rep["sphere"] == pytest.approx(1.0)
    assert rep["true_sqrt_lambda_1"] == pytest.approx(math.sqrt(2))


def test_eigmin_circle_sharp(capsys):
    _, out, _ = run(capsys, "eigmin", "--space", "circle", "--json")
    rep = json.loads(out)
    assert rep["sphere"] == pytest.approx(2 * math.pi) == rep["true_sqrt_lambda_1"]


def test_eigmin_s2_k5(capsys):
    code, out, _ = run(capsys, "eigmin", "--space", "s2", "--k", "5", "--json")
    rep = json.loads(out)
    assert code == 0
    assert 0 < rep["lower_bound_k"] <= math.sqrt(6)
    assert rep["true_sqrt_lambda_k"] == pytest.approx(math.sqrt(6))


def test_eigmin_text_output(capsys):
    code, out, _ = run(capsys, "eigmin", "--space", "s3")
    assert code == 0 and "li_improved:" in out


def test_eigmin_inconsistent_data(capsys):
    code, _, err = run(capsys, "eigmin", "--space", "s2", "--volume", "1")
    assert code == 2 and "inconsistent" in err


def test_eigmin_noncompact_rejected(capsys):
    code, _, _ = run(capsys, "eigmin", "--space", "h2")
    assert code == 2


# usage errors

@pytest.mark.parametrize("argv", [
    ["bound", "--space", "nowhere", "--lmin", "1", "--lmax", "2"],
    ["bound", "--space", "s2", "--lmin", "2", "--lmax", "1"],
    ["bound", "--space", "s2", "--lmin", "-1", "--lmax", "1"],
    ["bound", "--space", "s2", "--lmin", "1", "--lmax", "2", "--method", "magic"],
    ["bound", "--space", "s2", "--lmin", "1", "--lmax", "2", "--method", "alpha", "--alpha", "2"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_numeric_failure_exit_3(capsys, monkeypatch):
    from homspec.errors import NonConvergence
    from homspec.spaces import NamedSpace

    def fail(self, lam, cfg=None):
        raise NonConvergence("subdivision budget exhausted", 1.0, 0.5)

    monkeypatch.setattr(NamedSpace, "bound", fail)
    code, _, err = run(capsys, "bound", "--space", "h6", "--lmin", "1", "--lmax", "2", "--points", "2")
    assert code == 3
    assert "counting bound" in err


def test_invariant_violation_exit_4(capsys, monkeypatch):
    from homspec.spaces import NamedSpace

    monkeypatch.setattr(NamedSpace, "bound", lambda self, lam, cfg=None: type("R", (), {"value": -1.0})())
    code, _, err = run(capsys, "compare", "--space", "s2", "--lmin", "1", "--lmax", "2", "--points", "2")
    assert code == 4
    assert "below" in err


def test_module_entry_point(tmp_path):
    out = tmp_path / "x.csv"
    proc = subprocess.run([sys.executable, "-m", "homspec", "bound", "--space", "s2", "--lmin", "1", "--lmax", "2",
                           "--points", "3", "--csv", str(out)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert out.read_text().startswith("lambda,bound\n")
