import json
import os
import subprocess
import sys

import pytest

from trihedral.cli import laurent_str, main, run
from trihedral.exact_arith import BivarPoly, LaurentPoly, quantum_factorial, quantum_integer
from trihedral.graphs import TricoloredGraph, type_A


def out_of(argv):
    code, text, _ = run(argv)
    return code, text


def test_poly_text():
    assert out_of(["poly", "--m", "2", "--n", "2"]) == (0, "X^2Y^2 - X^3 - Y^3")


def test_poly_json_roundtrip():
    code, text = out_of(["poly", "--m", "3", "--n", "1", "--xy", "--format", "json"])
    data = json.loads(text)
    assert code == 0
    assert BivarPoly.from_json(data["coeffs"]) == BivarPoly.parse(data["poly"])
    X, Y = BivarPoly.var(0), BivarPoly.var(1)
    q = BivarPoly.parse(data["xy"]["poly"], ("x", "y"))
    back = sum(((X * Y) ** a * Y ** (3 * b) * c for (a, b), c in q.coeffs.items()), BivarPoly())
    assert back == BivarPoly.parse(data["poly"]) * Y ** data["xy"]["Y_power"]


def test_roots_json():
    code, text = out_of(["roots", "--level", "3", "--format", "json"])
    data = json.loads(text)
    assert code == 0 and len(data) == 10
    assert all(set(d) == {"k", "l", "z", "orbit"} for d in data)


def test_graph_check():
    code, text = out_of(["graph", "--family", "A", "--level", "2", "--check", "--format", "json"])
    data = json.loads(text)
    assert code == 0
    cert = data["certificates"]
    assert cert["admissible"] and cert["annihilation"]["ok"] and cert["spectrum"]["ok"]
    assert TricoloredGraph.from_json(data["graph"]) == type_A(2)


def test_graph_e_family():
    code, text = out_of(["graph", "--family", "E", "--name", "E5", "--check", "--format", "json"])
    assert code == 0 and json.loads(text)["graph"]["green"] == 4


def test_usage_errors():
    assert out_of(["graph", "--family", "D", "--level", "4"])[0] == 2
    assert out_of(["graph", "--family", "E"])[0] == 2
    assert out_of(["hecke", "--level", "1", "--product", "2,0,g", "1"])[0] == 2
    assert main(["frobnicate"]) == 2
    assert main(["roots", "--level", "-1"]) == 2
    assert main(["roots", "--level", "1", "--tol", "0.5"]) == 2
    assert main(["zigzag", "--level", "1"]) == 2


def test_hecke_product():
    code, text = out_of(["hecke", "--level", "2", "--product", "0,0,g", "0,0,g", "--format", "json"])
    data = json.loads(text)
    assert code == 0
    assert data["result"] == [{"label": "0,0,g", "coeff": laurent_str(quantum_factorial(3))}]
    code, text = out_of(["hecke", "--level", "2", "--positivity", "--format", "json"])
    assert code == 0 and json.loads(text)["negative_pairs"] == []
    assert json.loads(text)["dimension"] == 19


def test_pretty_printing():
    assert laurent_str(quantum_integer(2), pretty=True) == "[2]"
    assert laurent_str(quantum_factorial(3), pretty=True) == "[3]!"
    assert laurent_str(quantum_integer(2)) == "v + v^-1"
    assert laurent_str(LaurentPoly()) == "0"


def test_cells_and_reps():
    data = json.loads(out_of(["cells", "--level", "2", "--format", "json"])[1])
    assert sorted(len(c) for c in data["left"]) == [1, 6, 6, 6]
    data = json.loads(out_of(["reps", "--level", "3", "--format", "json"])[1])
    assert data["simple_table"] == {"one_dim_count": 4, "three_dim_count": 3, "sum_of_squares": 31}


def test_zigzag_commands():
    data = json.loads(out_of(["zigzag", "--level", "1", "--gram", "--format", "json"])[1])
    assert data["nondegenerate"] and len(data["basis"]) == 30
    data = json.loads(out_of(["zigzag", "--level", "2", "--theta", "g", "--format", "json"])[1])
    assert len(data["matrix"]) == 6
    code, text = out_of(["zigzag", "--level", "1", "--cartan", "--pretty"])
    assert code == 0 and text


def test_classify_writes_file(tmp_path):
    path = tmp_path / "res.json"
    code, text = out_of(["classify", "--level", "2", "--out", str(path), "--format", "json"])
    assert code == 0
    data = json.loads(path.read_text())
    assert data == json.loads(text)
    assert data["ok"] and data["found_classes"] == 1


def test_output_flag(tmp_path):
    path = tmp_path / "roots.json"
    assert main(["roots", "--level", "1", "--format", "json", "-o", str(path)]) == 0
    assert len(json.loads(path.read_text())) == 3


def test_verify_all_small_level():
    code, text = out_of(["verify-all", "--level", "1", "--format", "json"])
    data = json.loads(text)
    assert [r["criterion"] for r in data["results"]] == list(range(1, 11))


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "trihedral", "poly", "--m", "2", "--n", "0"],
                         capture_output=True, text=True, env={**os.environ, "NO_COLOR": "1"})
    assert res.returncode == 0 and res.stdout.strip() == "X^2 - Y"


@pytest.mark.parametrize("argv", [
    ["poly", "--m", "2", "--n", "1", "--format", "json"],
    ["roots", "--level", "4", "--format", "json"],
    ["hecke", "--level", "1", "--format", "json"],
])
def test_deterministic(argv):
    assert out_of(argv) == out_of(argv)


def test_thread_count_does_not_change_output():
    base = ["classify", "--level", "3", "--exhaustive", "--max-verts", "3", "--format", "json"]
    assert out_of(base) == out_of(base + ["--workers", "4"])
