import io
import json

import pytest

from conftest import DATA
from matroid_faces.cli import main
from matroid_faces.matroid import matroid_from_document


def run(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return json.loads(out)


def test_fpoly_fano():
    res = run_json("fpoly", "--matroid", "fano", "--complex", "s0")
    assert res["coeffs"] == ["1", "48", "124", "78"]
    assert res["total"] == "251"
    assert res["open_stars_by_rank"]["2"] == ["1", "1", "4", "3"]


def test_simple_values():
    assert run_json("rho-limit", "--r", "2")["rho_limit"] == "1/1"
    assert run_json("total", "--matroid", "uniform:2:3", "--complex", "s0")["total"] == "21"
    assert run_json("total", "--r", "3", "--n", "7")["total"] == "391"
    assert run_json("total", "--r", "2", "--n", "3", "--altcells")["total"] == "17"
    assert run_json("uniform-fpoly", "--r", "2", "--n", "3")["coeffs"] == ["1", "10", "10"]
    assert run_json("fl-total", "--r", "2", "--n", "3")["total"] == "13"
    assert run_json("fl", "--matroid", "uniform:2:3")["coeffs"] == ["1", "6", "6"]
    assert run_json("rho", "--r", "2", "--n", "3")["rho"] == "21/13"
    assert run_json("bell", "--i", "3")["ordered_bell"] == "13"
    g = run_json("growth", "--r", "4")
    assert g["leading"] == "26/3" and g["matches"] is True


def test_fl_from_covectors():
    res = run_json("fl", "--covectors", str(DATA / "u23_covectors.txt"))
    assert res["total"] == res["covectors"] == "13"


def test_fl_tags_lattice_quantity():
    assert "oriented" in run_json("fl", "--matroid", "fano")["note"]


@pytest.mark.parametrize("mode", ["star", "naive"])
def test_oracle_agrees(mode, tmp_path):
    res = run_json("oracle", "--matroid", "uniform:2:3", "--complex", "edge", "--mode", mode)
    assert res["agrees_with_formula"] is True
    fp = run_json("fpoly", "--matroid", "uniform:2:3", "--complex", "edge")
    assert res["coeffs"] == fp["coeffs"]


def test_oracle_census(tmp_path):
    census = tmp_path / "labels.txt"
    res = run_json("oracle", "--matroid", "uniform:2:3", "--census", str(census))
    assert len(census.read_text().splitlines()) == int(res["total"]) - 1
    assert run("oracle", "--matroid", "fano", "--mode", "naive", "--census", str(census))[0] == 2


def test_budget_exit_code(monkeypatch):
    monkeypatch.setenv("MATROID_FACES_MAX_LABELS", "10")
    code, _, err = run("oracle", "--matroid", "fano")
    assert code == 4 and "budget" in err


def test_asymptotics_csv():
    code, out, _ = run("asymptotics", "--r", "2", "--max-n", "4")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "n,engstrom_total,fl_total,rho_decimal,rho"
    assert lines[2].startswith("3,21,13,") and lines[2].endswith(",21/13")
    assert "\r" not in out


def test_output_is_deterministic():
    a = run("fpoly", "--matroid", "uniform:3:6", "--complex", "triangle")
    b = run("fpoly", "--matroid", "uniform:3:6", "--complex", "triangle")
    assert a == b


def test_validate_and_echo_round_trip(tmp_path):
    doc = {"n": 4, "bases": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(doc))
    res = run_json("validate", "flats", str(path), "--echo")
    echoed = res["document"]
    assert matroid_from_document(echoed) == matroid_from_document(doc)
    path2 = tmp_path / "echo.json"
    path2.write_text(json.dumps(echoed))
    assert run_json("validate", "flats", str(path2), "--echo")["document"] == echoed


def test_validate_failures(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 3, "flats": [[1], [2], [1, 2, 3]]}))
    code, _, err = run("validate", "flats", str(path))
    assert code == 3
    report = json.loads(err)
    assert report["axiom"] == "F2" and report["witness"]["missing"] == []

    cov = tmp_path / "cov.txt"
    lines = (DATA / "u23_covectors.txt").read_text().splitlines()
    cov.write_text("\n".join(ln for ln in lines if ln != "+++") + "\n")
    code, _, err = run("validate", "covectors", str(cov))
    assert code == 3 and json.loads(err)["axiom"] in {"L1", "L2", "L3"}
    assert run_json("validate", "covectors", str(DATA / "u24_covectors.txt"))["covectors"] == "17"


def test_input_errors(tmp_path):
    assert run("fpoly", "--matroid", "uniform:5:3")[0] == 2
    assert run("fpoly", "--matroid", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "x.json"
    bad.write_text("{not json")
    assert run("fpoly", "--matroid", str(bad))[0] == 2
    assert run("fpoly", "--matroid", "fano", "--complex", "blob")[0] == 2
    assert run("nonsense")[0] == 2


def test_hasse_dump():
    code, out, _ = run("hasse", "--matroid", "uniform:2:3")
    assert code == 0
    assert out.splitlines()[0] == "lower,upper"
    assert len(out.splitlines()) == 7
