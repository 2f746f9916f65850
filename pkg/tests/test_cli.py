from __future__ import annotations

import json
import subprocess
import sys

import pytest

from qcolor.cli import main
from qcolor.io import parse_coloring, parse_graph, read_graph
from qcolor.graph import validate
from qcolor.oracle import solve_exact


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def k6(tmp_path, capsys):
    path = tmp_path / "k6.txt"
    assert run(capsys, "gen", "clique", 6, "-o", path)[0] == 0
    return path


def test_gen_outputs(capsys):
    code, out, _ = run(capsys, "gen", "biclique", 4, 2)
    g = parse_graph(out).graph
    assert code == 0 and (g.n, g.m) == (6, 8)
    code, out, _ = run(capsys, "gen", "random-planar", 40, "--seed", 7, "--with-embedding")
    assert code == 0 and parse_graph(out).rotation is not None
    assert run(capsys, "gen", "random-tree", 12)[0] == 2


def test_solve_exact_k6(k6, capsys):
    code, out, _ = run(capsys, "solve", k6, "--method", "exact")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 5 and doc["method"] == "exact"


def test_solve_tree_matches_oracle(tmp_path, capsys):
    path = tmp_path / "t.txt"
    run(capsys, "gen", "random-tree", 12, "--seed", 7, "-o", path)
    code, out, _ = run(capsys, "solve", path, "--method", "tree")
    g = read_graph(path).graph
    assert code == 0 and json.loads(out)["value"] == solve_exact(g, 2).value
    code, out, _ = run(capsys, "solve", path)
    assert json.loads(out)["method"] == "tree"


def test_solve_planar_grid(tmp_path, capsys):
    path = tmp_path / "g.txt"
    run(capsys, "gen", "grid", 20, 20, "-o", path)
    code, out, _ = run(capsys, "solve", path, "--method", "planar")
    doc = json.loads(out)
    assert code == 0 and {"separator_size", "num_components", "epsilon_used"} <= doc.keys()
    assert validate(read_graph(path).graph, 2, parse_coloring(out))
    code, out, _ = run(capsys, "solve", path, "--method", "planar", "--epsilon", "1/4")
    assert code == 0 and json.loads(out)["epsilon_used"] == 0.25
    code, out, _ = run(capsys, "solve", path, "--method", "planar", "--no-rebalance")
    assert code == 0 and json.loads(out)["rebalanced_edges"] == 0


def test_auto_uses_embedding(tmp_path, capsys):
    path = tmp_path / "rp.txt"
    run(capsys, "gen", "random-planar", 60, "--seed", 1, "--with-embedding", "-o", path)
    assert json.loads(run(capsys, "solve", path)[1])["method"] == "planar"


def test_exit_codes(k6, tmp_path, capsys):
    assert run(capsys, "solve", tmp_path / "missing.txt")[0] == 2
    assert run(capsys, "solve", k6, "--epsilon", "abc")[0] == 2
    assert run(capsys, "solve", k6, "--method", "tree")[0] == 3
    assert run(capsys, "solve", k6, "--method", "tree", "--q", 3)[0] == 3
    k10 = tmp_path / "k10.txt"
    run(capsys, "gen", "clique", 10, "-o", k10)
    assert run(capsys, "solve", k10, "--method", "exact")[0] == 3
    code, out, _ = run(capsys, "solve", k10, "--method", "exact", "--max-edges", 0,
                       "--time-budget", 0.05)
    assert code == 4 and json.loads(out)["proven"] is False


def test_validate(k6, tmp_path, capsys):
    col = tmp_path / "c.txt"
    run(capsys, "solve", k6, "--format", "raw", "-o", col)
    assert run(capsys, "validate", k6, col)[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1 2" + " 0" * 12)
    code, out, _ = run(capsys, "validate", k6, bad)
    assert code == 1 and "vertex 0" in out
    short = tmp_path / "short.txt"
    short.write_text("0 1")
    assert run(capsys, "validate", k6, short)[0] == 2


def test_solve_output_validates_for_each_method(k6, tmp_path, capsys):
    for method in ("exact", "planar", "trivial"):
        out = tmp_path / f"{method}.json"
        assert run(capsys, "solve", k6, "--method", method, "-o", out)[0] == 0
        assert run(capsys, "validate", k6, out)[0] == 0


def test_bounds_and_dot(k6, tmp_path, capsys):
    code, out, _ = run(capsys, "bounds", k6)
    assert json.loads(out)["avg_degree_bound_real"] == "25/8"
    col = tmp_path / "c.json"
    run(capsys, "solve", k6, "-o", col)
    code, out, _ = run(capsys, "export-dot", k6, col)
    assert code == 0 and out.startswith("graph") and out.count("--") == 15


def test_reduce_and_check(tmp_path, capsys):
    phi = tmp_path / "phi.txt"
    phi.write_text("f 3 1\nc 0 1 2\n")
    roles = tmp_path / "roles.json"
    code, out, _ = run(capsys, "reduce", phi, "--general", "--roles", roles)
    assert code == 0 and parse_graph(out).graph.m == 24
    assert json.loads(roles.read_text())["L"] == 7
    code, out, _ = run(capsys, "reduce", phi, "--uniform", 2)
    assert code == 0 and parse_graph(out).qspec.uniform == 2
    code, out, _ = run(capsys, "check-reduction", phi)
    assert code == 0 and json.loads(out)["verdict"] == "agree"
    bad = tmp_path / "bad.txt"
    bad.write_text("f 3 1\nc 0 1\n")
    assert run(capsys, "check-reduction", bad)[0] == 2


def test_module_entry_point(k6):
    proc = subprocess.run([sys.executable, "-m", "qcolor.cli", "bounds", str(k6)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["best"] == 4
