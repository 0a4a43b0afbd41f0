import csv
import io
import json
import math

import pytest

from omitroots import cli
from omitroots.constants import covering_derivative, gamma_n


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_constants_table(capsys):
    code, out, _ = run(capsys, "--format", "csv", "constants", "2", "3", "4", "5", "10", "100", "1000")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in rows] == [2, 3, 4, 5, 10, 100, 1000]
    assert abs(float(rows[0]["gamma_n"]) / 3.52993 - 1) < 5e-6
    assert abs(float(rows[-1]["r_n"]) / 0.910713 - 1) < 5e-6
    assert abs(float(rows[-1]["schwarz_factor"]) / 1.20059 - 1) < 5e-6


def test_constants_empty(capsys):
    code, out, _ = run(capsys, "constants")
    assert code == 0
    assert out.split() == list(cli.CONSTANT_COLUMNS)


def test_constants_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "constants", "2")
    data = json.loads(out)
    assert set(data[0]) == {"n", "gamma_n", "k2", "k3", "r_n", "schwarz_factor", "covering_derivative", "lambda_at_zero"}


def test_constants_bad_n(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["constants", "1"])
    assert exc.value.code != 0
    err = capsys.readouterr().err
    assert err.startswith("error:") and err.count("\n") == 1


def test_csv_number_format(capsys):
    _, out, _ = run(capsys, "--format", "csv", "constants", "2")
    value = out.splitlines()[1].split(",")[1]
    mantissa = value.split("e")[0].replace(".", "").lstrip("-")
    assert len(mantissa) == 17 and "e" in value


def test_density_equality_locus(capsys):
    code, out, _ = run(capsys, "--format", "json", "density", "0", "1", "--lower-bound")
    d = json.loads(out)
    assert code == 0 and d["equality_locus"]
    assert abs(d["density"] * 3.52993 - 1) < 5e-6
    assert abs(d["ratio"] - 1) < 1e-9


def test_density_origin_n3(capsys):
    _, out, _ = run(capsys, "--n", "3", "--format", "json", "density", "0")
    assert json.loads(out)["density"] == 2 / covering_derivative(3)


def test_density_puncture(capsys):
    code, out, err = run(capsys, "density", "1")
    assert code != 0 and out == ""
    assert err.startswith("error:") and err.count("\n") == 1


def test_bounds(capsys):
    _, out, _ = run(capsys, "--format", "json", "bound", "landau", "0")
    assert abs(json.loads(out)["landau_bound"] - 7.19876374202) < 1e-9
    _, out, _ = run(capsys, "--format", "json", "bound", "schottky", "1", "0.5")
    assert json.loads(out)["log_bound"] == pytest.approx(2 * gamma_n(2), rel=1e-15)
    _, out, _ = run(capsys, "--format", "json", "bound", "hempel", "-1")
    assert json.loads(out) == {"a0": {"re": -1.0, "im": 0.0}, "hempel_bound": 0.0, "degenerate": True}


def test_schwarz_error_cites_radius(capsys):
    code, _, err = run(capsys, "bound", "schwarz", "0.2")
    assert code != 0 and err.startswith("error:") and "R_2 = 0.111756" in err


def test_landau_warns_on_root(capsys):
    code, _, err = run(capsys, "--n", "3", "bound", "landau", "1")
    assert code == 0 and err.startswith("warning:")


def test_global_flags_after_subcommand(capsys):
    _, a, _ = run(capsys, "--format", "csv", "--n", "5", "density", "0.3")
    _, b, _ = run(capsys, "density", "0.3", "--format", "csv", "--n", "5")
    assert a == b


def test_tol_changes_display_only(capsys):
    _, coarse, _ = run(capsys, "--tol", "1e-3", "constants", "2")
    _, fine, _ = run(capsys, "--tol", "1e-14", "constants", "2")
    assert len(coarse) < len(fine)
    _, c1, _ = run(capsys, "--tol", "1e-3", "--format", "csv", "constants", "2")
    _, c2, _ = run(capsys, "--format", "csv", "constants", "2")
    assert c1 == c2


def test_compare(capsys):
    _, out, _ = run(capsys, "--format", "json", "compare", "-0.99")
    assert json.loads(out)["winner"] == "HEMPEL_SHARPER"


def test_grid_single_cell(capsys):
    code, out, _ = run(capsys, "grid", "density", "--x-range", "-1", "1", "--y-range", "-1", "1", "--nx", "1", "--ny", "1")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "x,y,value" and len(lines) == 2
    x, y, v = lines[1].split(",")
    assert float(x) == 0 and float(y) == 0 and float(v) == pytest.approx(0.45694658104446362537, rel=1e-14)


def test_grid_order_and_out_file(capsys, tmp_path):
    path = tmp_path / "g.csv"
    code, out, _ = run(
        capsys, "--n", "4", "--out", str(path), "grid", "density",
        "--x-range", "0.9995", "1.0005", "--y-range", "-1", "1", "--nx", "3", "--ny", "2",
    )
    assert code == 0 and out == ""
    rows = list(csv.reader(path.open()))
    pts = [(float(x), float(y)) for x, y, _ in rows[1:]]
    assert rows[0] == ["x", "y", "value"] and len(pts) == 6
    assert pts == sorted(pts, key=lambda p: (p[1], p[0]))


def test_grid_inf_flag(capsys):
    _, out, _ = run(capsys, "grid", "density_ratio", "--x-range", "0.9998", "1.0002", "--y-range", "-0.0001", "0.0001",
                    "--nx", "1", "--ny", "1")
    assert out.splitlines()[1].endswith(",inf-flagged")


def test_grid_bound_winner(capsys):
    _, out, _ = run(capsys, "grid", "bound_winner", "--nx", "41", "--ny", "41")
    cells = {}
    for line in out.splitlines()[1:]:
        x, y, v = line.split(",")
        cells[(round(float(x), 6), round(float(y), 6))] = int(v)
    assert set(cells.values()) <= {-1, 0, 1}
    assert cells[(0.0, 0.0)] == 1
    near = min(cells, key=lambda p: math.hypot(p[0] + 1, p[1]))
    assert cells[near] == -1


def test_grid_rejects_oversize(capsys):
    code, _, err = run(capsys, "grid", "density", "--nx", "100000", "--ny", "1001")
    assert code != 0 and err.startswith("error:")


def test_grid_rejects_empty_range(capsys):
    code, _, err = run(capsys, "grid", "density", "--x-range", "1", "1")
    assert code != 0 and err.startswith("error:")


def test_deterministic(capsys):
    argv = ["--n", "70", "grid", "density", "--x-range", "-1.5", "1.5", "--y-range", "-1.5", "1.5", "--nx", "12", "--ny", "9"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_verify(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify")
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert all(r["pass"] for r in reports)
    assert any(r["quantity"] == "table.gamma_n(n=10)" for r in reports)


def test_verify_empty(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "--ns", "")
    assert code == 0 and out == ""


def test_verify_failure_exit_code(capsys, monkeypatch):
    bad = cli.verify.OracleReport("bad", 1.0, 2.0, 0.5, 1e-3, False)
    monkeypatch.setattr(cli.verify, "run_oracle_suite", lambda ns: [bad])
    code, _, _ = run(capsys, "verify")
    assert code == 1
