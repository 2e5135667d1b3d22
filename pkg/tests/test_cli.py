from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from bigenic.classifier import parse_survey_csv
from bigenic.cli import emit_report, main, read_graph, split_patterns
from bigenic.families import realize
from bigenic.formats import from_graph6
from bigenic.gadgets import fano_instance


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = main(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


@pytest.fixture
def single_clause(tmp_path):
    path = tmp_path / "one.nae"
    path.write_text("p nae 3 1\n1 2 3 0\n")
    return str(path)


def test_catalog():
    status, out, _ = run("catalog", "co(C3+2P1)")
    assert status == 0 and from_graph6(out.strip()).n == 5
    status, out, _ = run("catalog")
    assert status == 0 and len(out.splitlines()) == 20


def test_classify_text_and_json():
    status, out, _ = run("classify", "--h1", "2P2", "--h2", "co(3P2)")
    assert status == 0 and out.splitlines()[0] == "NPComplete" and "N12" in out
    status, out, _ = run("classify", "--h1", "2P2", "--h2", "co(3P2)", "--json")
    doc = json.loads(out)
    assert doc["status"] == "NPComplete" and doc["trace"][0]["rule"] == "N12"


def test_graph_inputs_accept_graph6():
    assert read_graph("g6:Ch") == realize("P4")
    assert read_graph("Ch") == realize("P4")
    assert read_graph("P4") == realize("P4")
    status, out, _ = run("classify", "--h1", "g6:Ch", "--h2", "K10")
    assert status == 0 and out.startswith("PolynomialTime")


def test_split_patterns():
    assert split_patterns("2P2,K1,3,co(T0,2,2),P5") == ["2P2", "K1,3", "co(T0,2,2)", "P5"]
    assert split_patterns("C3; K1,3") == ["C3", "K1,3"]


def test_freeness():
    status, out, _ = run("freeness", "--host", "C5", "--patterns", "K3,2P2")
    assert (status, out.strip()) == (0, "free")
    status, out, _ = run("freeness", "--host", "P5", "--patterns", "K3,2P2")
    found = json.loads(out)
    assert [f["pattern"] for f in found] == ["2P2"] and len(found[0]["witness"]) == 4


def test_recognize_modes():
    assert json.loads(run("recognize", "--T", "paw")[1])["T"] == [0, 0, 1]
    assert json.loads(run("recognize", "--class-T", "C4")[1])["in_class_T"] is False
    doc = json.loads(run("recognize", "--open-pattern", "P6")[1])
    assert doc["matches"] == [{"family": 4, "parameters": {"s": 0, "t": 6}}]
    assert json.loads(run("recognize", "--tree-trichotomy", "K1,4")[1])["tag"] == "ContainsK14"
    status, _, err = run("recognize", "--tree-trichotomy", "C4")
    assert status == 1 and err.count("\n") == 1


def test_solve(tmp_path):
    assert json.loads(run("solve", "chromatic", "C5")[1])["chromatic_number"] == 3
    assert json.loads(run("solve", "kcol", "C5", "--k", "2")[1])["colouring"] is None
    lists = tmp_path / "lists.txt"
    lists.write_text("1 2\n2\n# comment\n1\n")
    assert json.loads(run("solve", "listcol", "P3", "--lists", str(lists))[1])["colouring"] == [1, 2, 1]
    assert run("solve", "kcol", "C5")[0] == 1


def test_reduce(single_clause, tmp_path):
    status, out, _ = run("reduce", "--instance", single_clause, "--variant", "g1p")
    g6, sidecar = out.splitlines()
    assert status == 0 and from_graph6(g6).n == 11 and json.loads(sidecar)["graph6"] == g6
    side, col = tmp_path / "side.json", tmp_path / "g.col"
    status, out, _ = run("reduce", "--instance", single_clause, "--variant", "g2",
                         "--sidecar", str(side), "--dimacs", str(col))
    assert status == 0 and len(out.splitlines()) == 1
    assert json.loads(side.read_text())["variant"] == "g2"
    assert "p edge 5 " in col.read_text()


def test_verify_random_sweep_and_determinism():
    argv = ("verify", "all", "--random", "5", "--max-vars", "4", "--max-clauses", "3", "--seed", "1")
    status, out, _ = run(*argv)
    doc = json.loads(out)
    assert status == 0 and doc["version"] == 1 and len(doc["reports"]) == 5
    assert all(c["status"] == "holds" for r in doc["reports"] for c in r["claims"])
    assert run(*argv)[1] == out


def test_verify_instance_file(tmp_path):
    path = tmp_path / "fano.nae"
    path.write_text(fano_instance().to_text())
    status, out, _ = run("verify", "lemma1", "--instance", str(path))
    doc = json.loads(out)
    assert status == 0 and doc["reports"][0]["instance"]["n"] == 7


def test_verify_violation_exits_3(monkeypatch, single_clause):
    from bigenic import lemmas

    monkeypatch.setattr(lemmas, "solve_nae", lambda inst: None)
    status, out, err = run("verify", "lemma1", "--instance", single_clause)
    assert status == 3 and err.startswith("error:") and err.count("\n") == 1
    assert json.loads(out)["reports"][0]["claims"][-1]["status"] == "violated"


def test_emit_report_schema():
    assert emit_report([]) == '{"reports": [], "version": 1}'
    assert json.loads(emit_report([])) == {"version": 1, "reports": []}


def test_survey_csv_round_trip():
    status, out, _ = run("survey", "--forbid", "2P2", "--max-n", "4")
    table = parse_survey_csv(out)
    assert status == 0 and len(table.rows) == 18 and table.forbidden == "2P2"
    status, out, _ = run("survey", "--forbid", "P5", "--max-n", "3", "--format", "json")
    assert json.loads(out)["counts"]["PolynomialTime"] == 7


def test_enumerate():
    status, out, _ = run("enumerate", "--n", "4")
    assert status == 0 and len(out.split()) == 11


@pytest.mark.parametrize(
    "argv,code",
    [
        (("bogus",), 1),
        (("classify", "--h1", "P4"), 1),
        (("classify", "--h1", "P4", "--h2", "X("), 1),
        (("catalog", "S0,1,1"), 1),
        (("catalog", "P65"), 2),
        (("enumerate", "--n", "8"), 2),
        (("classify", "--h1", "P13", "--h2", "P2"), 2),
        (("reduce", "--instance", "/nonexistent.nae", "--variant", "g1"), 1),
        (("verify", "lemma1"), 1),
        (("survey", "--forbid", "C4", "--max-n", "3"), 1),
        (("classify", "--unknown-flag"), 1),
    ],
)
def test_error_paths_print_one_line(argv, code):
    status, out, err = run(*argv)
    assert status == code
    assert err.startswith("error: ") and err.count("\n") == 1
    assert out == ""


def test_bad_nae_file(tmp_path):
    path = tmp_path / "bad.nae"
    path.write_text("p nae 3 1\n1 1 2 0\n")
    status, _, err = run("reduce", "--instance", str(path), "--variant", "g1")
    assert status == 1 and "repeats a variable" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bigenic", "catalog", "P4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "Ch\n"
    proc = subprocess.run([sys.executable, "-m", "bigenic", "nope"], capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stderr.count("\n") == 1
