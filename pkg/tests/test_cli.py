import io
import json
import subprocess
import sys

import pytest

from ncchromatic.cli import main
from ncchromatic.freealg import QM, from_json


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_graphs():
    code, out = run("graphs", "--n", "3")
    assert code == 0 and out.strip().endswith("count: 5")
    code, out = run("graphs", "--n", "0")
    assert code == 0 and "count: 1" in out
    code, out = run("graphs", "--n", "5", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 42


def test_graphs_out_of_range(monkeypatch):
    assert run("graphs", "--n", "-1")[0] == 2
    monkeypatch.setenv("NCCHROMATIC_MAX_N", "4")
    assert run("graphs", "--n", "5")[0] == 2


def test_expand():
    assert run("expand", "--graph", "h:2,2", "--target", "X:wqsym-M") == (0, "t*M[12] + M[21]\n")
    assert run("expand", "--graph", "h:1,2", "--target", "X:wqsym-M") == (0, "M[11] + M[12] + M[21]\n")
    assert run("expand", "--graph", "h:1", "--target", "LLT:wqsym-M") == (0, "M[1]\n")
    code, out = run("expand", "--graph", "h:2,2,3", "--target", "X:wqsym-Phi")
    assert out.strip() == "t*Phi[121] + t*Phi[122] + Phi[211] + Phi[212] + t*Phi[231] + Phi[321]"
    code, out = run("expand", "--graph", "e:2;1-2", "--target", "X:qsym-M", "--json")
    assert code == 0 and from_json(out).to_text() == "(t+1)*M[(1,1)]"


def test_expand_errors():
    assert run("expand", "--graph", "h:3,1,3", "--target", "X:wqsym-M")[0] == 2
    assert run("expand", "--graph", "h:2,2", "--target", "nope")[0] == 2
    assert run("expand", "--graph", "e:3;1-3", "--target", "X:wqsym-Phi")[0] == 2


def test_transform(tmp_path):
    f = tmp_path / "m1.json"
    f.write_text(QM((1,)).dumps())
    assert run("transform", "--alphabet", "t-1", "--input", str(f)) == (0, "(t-1)*M[(1)]\n")
    g = tmp_path / "x.txt"
    g.write_text("M[12]")
    assert run("transform", "--alphabet", "t-1", "--input", str(g))[0] == 2
    assert run("transform", "--alphabet", "t-1", "--input", str(g), "--basis", "WQSym.M") == (
        0, "(-t+1)*M[11] + (t^2-2*t+1)*M[12]\n")
    h = tmp_path / "f.txt"
    h.write_text("F[12]")
    assert run("transform", "--alphabet", "t-1", "--input", str(h), "--basis", "FQSym.F")[0] == 2


def test_stats():
    assert run("stats", "--graph", "h:2,3,5,5,5", "--statistic", "st", "--perm", "35142") == (
        0, "35142: inv 2, maj 6, st 8\n")
    assert run("stats", "--graph", "h:2,4,4,6,6,6", "--statistic", "increments", "--perm", "52314") == (
        0, "⁴5 ³2 ⁵3 ²1 ¹4 ⁰\n")
    code, out = run("stats", "--graph", "h:2,3,3", "--statistic", "code", "--format", "csv")
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "perm,code" and len(rows) == 7
    assert run("stats", "--graph", "h:2,3,3", "--statistic", "st", "--perm", "1234")[0] == 2


def test_verify():
    code, out = run("verify", "--identity", "rank", "--n", "4")
    assert code == 0 and "rank 14, Catalan 14" in out
    code, out = run("verify", "--identity", "main", "--n", "4")
    assert code == 0 and out.strip().endswith("pass, 22 checked in total")
    assert run("verify", "--identity", "bogus")[0] == 2


def test_verify_resource_bounds(monkeypatch):
    monkeypatch.setenv("NCCHROMATIC_MAX_N", "3")
    assert run("verify", "--identity", "main", "--n", "4")[0] == 3
    monkeypatch.delenv("NCCHROMATIC_MAX_N")
    assert run("verify", "--identity", "mahonian", "--n", "5", "--timeout", "0")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ncchromatic", "graphs", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "count: 2" in proc.stdout
