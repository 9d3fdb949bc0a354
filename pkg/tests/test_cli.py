import json
import subprocess
import sys

import pytest

from regdef import io
from regdef.cli import main


def run(*argv):
    return main([str(a) for a in argv])


def test_construct_writes_files(tmp_path, capsys):
    out, tr, dot = tmp_path / "g.json", tmp_path / "t.json", tmp_path / "g.dot"
    s, c = tmp_path / "s.json", tmp_path / "c.json"
    rc = run("construct", "--family", "t1", "--k", 5, "--t", 0, "--out", out, "--trace", tr, "--dot", dot,
             "--defining", s, "--coloring", c)
    assert rc == 0
    assert capsys.readouterr().out.strip() == "n=14 r=8 k=5 |S|=4"
    g = io.read_graph(out)
    assert g.n == 14
    assert io.read_trace(tr).replay().same_as(g)
    assert len(io.read_coloring(s)) == 4 and len(io.read_coloring(c)) == 14
    assert dot.read_text().count("fillcolor") == 4


def test_construct_infeasible(capsys):
    assert run("construct", "--family", "t1", "--k", 5, "--t", 3) == 3
    assert "TEqualsKMinus2" in capsys.readouterr().out


def test_construct_builder_rejects(capsys):
    # feasible (n, r, k) but outside the family's parameter range
    assert run("construct", "--family", "t2", "--k", 7, "--s", 6) == 3
    assert "ParamOutOfRange" in capsys.readouterr().out


def test_construct_usage():
    assert run("construct", "--family", "t1", "--k", 5) == 2
    assert run("construct", "--family", "t9", "--k", 5) == 2
    assert run("construct", "--family", "glk", "--k", 3, "--l", 2, "--bogus") == 2
    assert run() == 2


def test_construct_graph6(tmp_path):
    out = tmp_path / "o.g6"
    assert run("construct", "--family", "glk", "--k", 3, "--l", 2, "--out", out) == 0
    assert io.read_graph(out).num_edges == 12


def octahedron_file(tmp_path):
    p = tmp_path / "o.json"
    assert run("construct", "--family", "glk", "--k", 3, "--l", 2, "--out", p) == 0
    return p


def write_coloring(tmp_path, k, colors):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"k": k, "colors": colors}))
    return p


def test_verify_defining(tmp_path, capsys):
    g = octahedron_file(tmp_path)
    capsys.readouterr()
    assert run("verify-defining", g, write_coloring(tmp_path, 3, {"u1": 1, "u2": 2})) == 0
    assert capsys.readouterr().out.strip() == "UNIQUE"
    assert run("verify-defining", g, write_coloring(tmp_path, 3, {"u1": 1})) == 1
    assert capsys.readouterr().out.strip() == "MULTIPLE"
    assert run("verify-defining", g, write_coloring(tmp_path, 3, {}), "--chi", 3) == 1
    assert capsys.readouterr().out.strip() == "MULTIPLE"
    assert run("verify-defining", g, write_coloring(tmp_path, 3, {"u1": 1, "u2": 1})) == 2


def test_verify_defining_theorem2(tmp_path, capsys):
    g, s = tmp_path / "g.json", tmp_path / "s.json"
    assert run("construct", "--family", "t2", "--k", 7, "--s", 1, "--out", g, "--defining", s) == 0
    capsys.readouterr()
    assert run("verify-defining", g, s) == 0
    assert capsys.readouterr().out.strip() == "UNIQUE"


def test_malformed_inputs(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("chi", bad) == 2
    assert run("chi", tmp_path / "missing.json") == 2
    g6 = tmp_path / "bad.g6"
    g6.write_bytes(b"C\n")
    assert run("chi", g6) == 2


def test_chi_and_defining_number(tmp_path, capsys):
    g = octahedron_file(tmp_path)
    capsys.readouterr()
    assert run("chi", g) == 0
    assert capsys.readouterr().out.strip() == "chi=3"
    assert run("defining-number", g, "--full") == 0
    assert capsys.readouterr().out.splitlines()[0] == "d=2"


def test_budget_exit(tmp_path):
    g = tmp_path / "g.json"
    assert run("construct", "--family", "glk", "--k", 4, "--l", 2, "--out", g) == 0
    assert run("--node-limit", 1, "defining-number", g, "--full") == 4


def test_feasible(capsys):
    assert run("feasible", "--n", 14, "--r", 8, "--k", 5) == 0
    assert run("feasible", "--n", 15, "--r", 9, "--k", 5) == 3
    out = capsys.readouterr().out.splitlines()
    assert out == ["feasible=true reason=OK", "feasible=false reason=BothOdd"]


def test_repro(capsys):
    assert run("repro", "--table", 1) == 0
    assert "5/5 columns matched" in capsys.readouterr().out
    assert run("repro", "--table", 2) == 0
    assert "6/6 columns matched" in capsys.readouterr().out
    assert run("repro", "--table", 3) == 2


def test_audit(capsys):
    assert run("audit", "--kmax", 2) == 2
    assert run("audit", "--kmax", 5) == 0
    first = capsys.readouterr().out
    assert first.strip().endswith("failed=0")
    assert run("audit", "--kmax", 5) == 0
    assert capsys.readouterr().out == first


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "regdef.cli", "feasible", "--n", "14", "--r", "8", "--k", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "reason=OK" in proc.stdout
