from __future__ import annotations

import json
import subprocess
import sys

import pytest

from linarr.cli import AnalysisReport, analyze, main
from linarr.inputs import arrangement_to_json, resolve
from linarr.builtins import builtin


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv) -> dict:
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


@pytest.fixture(scope="module")
def az_report():
    return analyze(resolve("AZ"))


def test_analyze_az(az_report):
    rep = az_report
    assert rep.profile.mdr == 5
    assert rep.tau == 42
    assert rep.defects.defects[8] > 0
    assert rep.hexagon["pascal_line"] == "y - 3*z"
    assert rep.hexagon["octic"] and rep.hexagon["octic_certified"]
    assert rep.gap is not None and rep.gap.degree == 8


def test_analysis_report_round_trip(az_report):
    data = json.loads(json.dumps(az_report.to_json()))
    assert AnalysisReport.from_json(data) == az_report


def test_analyze_moved_arrangement(capsys):
    data = run_json(capsys, "analyze", "AZp")
    assert data["profile"]["mdr"] == 6
    assert data["hexagon"]["octic"] is None
    assert data["hexagon"]["tangent_rank"] == 3
    assert AnalysisReport.from_json(data).to_json() == data


def test_analyze_triangle_text(capsys):
    code, out, _ = run(capsys, "analyze", "TRIANGLE")
    assert code == 0
    assert "exponents  [1, 1]" in out
    assert "free       yes" in out


def test_analyze_conic_is_trusted(capsys):
    data = run_json(capsys, "analyze", "x^2+y^2-z^2")
    assert data["caveat"] and data["lattice"] is None
    assert data["profile"]["generators"] == [1, 1, 1]


@pytest.mark.parametrize("a,b", [("AZ", "AZp"), ("BZ", "BZp")])
def test_compare_ziegler_pairs(capsys, a, b):
    code, out, _ = run(capsys, "compare", a, b)
    assert code == 0
    assert out.rstrip().endswith("ZIEGLER PAIR")
    if a == "BZ":
        assert "mdr(BZ) = d/2 = 5" in out


def test_compare_same_arrangement_is_not_a_pair(capsys):
    data = run_json(capsys, "compare", "AZ", "AZ")
    assert data["isomorphic"] and not data["ziegler_pair"]
    assert data["verdict"] == "not a Ziegler pair"


def test_defects_and_pascal_and_octic(capsys):
    data = run_json(capsys, "defects", "AD")
    assert data["tau"] == 42 and data["threshold"] == 8 and data["defects"][8] > 0
    data = run_json(capsys, "pascal", "AD")
    assert data["pascal_line"] == "x - y - 19*z" and data["conic_kind"] == "smooth"
    data = run_json(capsys, "octic", "AZ")
    assert data["certification"]["certified"]


def test_lattice_command(capsys):
    data = run_json(capsys, "lattice", "AZ", "AZp")
    assert data["points"] == {"2": 18, "3": 6}
    assert data["isomorphic"] and data["tau"] == 42


def test_search_csv_is_reproducible(capsys, tmp_path):
    paths = [tmp_path / f"run{i}.csv" for i in range(3)]
    for p, seed in zip(paths, (4, 4, 5)):
        code, out, _ = run(capsys, "search", "--count", "6", "--seed", str(seed), "--out", str(p))
        assert code == 0 and "samples" in out
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].read_bytes() != paths[2].read_bytes()


def test_search_to_stdout(capsys):
    code, out, err = run(capsys, "search", "--count", "2", "--mode", "on-conic")
    assert code == 0
    assert out.startswith("index,mode,status")
    assert "2 samples" in err


@pytest.mark.parametrize("name,lines", [("AZ", 8), ("AD", 9), ("TRIANGLE", 2)])
def test_render(capsys, tmp_path, name, lines):
    out = tmp_path / f"{name}.svg"
    data = run_json(capsys, "render", name, "--out", str(out))
    assert data["counts"]["arrangement"] == lines
    assert out.read_text().startswith("<svg")


def test_render_other_chart(capsys, tmp_path):
    out = tmp_path / "t.svg"
    data = run_json(capsys, "render", "TRIANGLE", "--chart", "x+y+z", "--out", str(out))
    assert data["counts"]["arrangement"] == 3


def test_json_inputs(capsys, tmp_path):
    lines = tmp_path / "az.json"
    lines.write_text(json.dumps(arrangement_to_json(builtin("AZ"))))
    data = run_json(capsys, "lattice", str(lines))
    assert data["tau"] == 42
    verts = tmp_path / "hex.json"
    verts.write_text(json.dumps({"vertices": [["0", "1", "-1"], ["1", "0", "-2"], ["1", "1", "0"],
                                              ["0", "1", "1"], ["1", "0", "1"], ["1", "2", "0"]]}))
    data = run_json(capsys, "pascal", str(verts))
    assert data["pascal_line"] == "y - 3*z"


@pytest.mark.parametrize("argv,code", [
    (["analyze", "1.5x"], 2),
    (["analyze", "(x+y"], 2),
    (["analyze", "x+y^2"], 2),
    (["analyze", "x*x*y"], 3),
    (["octic", "AZp"], 3),
    (["octic", "TRIANGLE"], 3),
    (["compare", "AZ", "x^2+y^2-z^2"], 3),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err


def test_bad_json_files(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "lattice", str(bad))[0] == 2
    zero = tmp_path / "zero.json"
    zero.write_text(json.dumps({"lines": [["0", "0", "0"], ["1", "0", "0"]]}))
    assert run(capsys, "lattice", str(zero))[0] == 2
    decimal = tmp_path / "dec.json"
    decimal.write_text(json.dumps({"lines": [["0.5", "1", "0"]]}))
    assert run(capsys, "lattice", str(decimal))[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "linarr", "lattice", "TRIANGLE", "--json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["tau"] == 3
