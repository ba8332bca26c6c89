import json
import shutil
import subprocess
import sys

import pytest

from kodaira.cli import main
from kodaira.corpus import CORPUS_ENV, corpus_dir


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_graph_golden(capsys):
    code, out, err = run(capsys, "enumerate", "graph", "--sigma-max", "16", "--check-golden", "--format", "csv")
    assert code == 0
    assert len(out.strip().splitlines()) == 33
    assert "golden check passed" in err


def test_enumerate_sig4_json(capsys):
    code, out, _ = run(capsys, "enumerate", "sig4", "--check-golden", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["label"] for r in rows][:4] == ["G1", "G2", "G3", "G4"]
    assert len(rows) == 16


def test_enumerate_fpf_reports_flags(capsys):
    code, out, err = run(capsys, "enumerate", "fpf", "--genus-max", "9", "--check-golden")
    assert code == 0
    assert "53 types" in out
    assert err.count("[flagged]") == 2


def test_enumerate_nielsen(capsys):
    code, out, _ = run(capsys, "enumerate", "nielsen", "--genus", "9", "--order", "10", "--format", "json")
    assert code == 0
    by_type = {}
    for r in json.loads(out):
        by_type.setdefault(tuple(r["periods"]), []).append(r["class"])
    assert sorted(by_type[(5, 5)]) == [[2, 8], [4, 6]]


def test_realize_corpus_entries(capsys):
    code, out, _ = run(capsys, "realize", "double-bisection-genus2", "--check", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["minimal_degree"] == 8
    assert rep["row"] == {"g_B1": 9, "g_F1": 4, "g_B2": 2, "g_F2": 25, "c2": 96, "c1_squared": 240,
                          "sigma": 16, "slope": "5/2"}
    code, out, _ = run(capsys, "realize", "d6-genus5", "--format", "json")
    assert json.loads(out)["row"]["sigma"] == 128


def test_invariants_exact_rational(capsys):
    code, out, _ = run(capsys, "invariants", "fib-sl23", "--format", "json")
    assert code == 0
    assert json.loads(out)["sigma"] == "16/3"
    code, out, _ = run(capsys, "invariants", "fib-graph-b3-z2", "--format", "json")
    assert json.loads(out)["sigma"] == 4


def test_cover_action(capsys):
    code, out, _ = run(capsys, "cover-action", "gv-genus2-order6")
    assert code == 0
    assert "x^4 - 2x^3 + 3x^2 - 2x + 1" in out and "PASS" in out
    code, out, _ = run(capsys, "cover-action", "gv-sl23", "--element", "[[1,0],[0,1]]", "--format", "json")
    res = json.loads(out)
    assert res["matrices"]["[[1,0],[0,1]]"] == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert res["stabilizer_index"] == 9


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "invariants", str(bad))[0] == 2
    assert run(capsys, "realize", "no-such-entry")[0] == 2
    doc = json.loads((corpus_dir() / "fib-graph-b3-z2.json").read_text())
    doc["payload"]["components"][0]["r"] = 3
    doc["payload"]["pullback_degree"] = 1
    doc.pop("expected")
    odd = tmp_path / "odd.json"
    odd.write_text(json.dumps(doc))
    assert run(capsys, "invariants", str(odd))[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])
    assert exc.value.code == 2


def test_golden_mismatch_exit_code(tmp_path, capsys, monkeypatch):
    src = corpus_dir()
    shutil.copytree(src, tmp_path / "corpus")
    path = tmp_path / "corpus" / "free-involution-b3.json"
    doc = json.loads(path.read_text())
    doc["expected"]["stabilizer_index"] = 5
    path.write_text(json.dumps(doc))
    monkeypatch.setenv(CORPUS_ENV, str(tmp_path / "corpus"))
    assert run(capsys, "examples", "free-involution-b3")[0] == 4
    assert run(capsys, "realize", "free-involution-b3", "--check")[0] == 4


def test_examples_all_and_out_dir(tmp_path, capsys):
    code, out, _ = run(capsys, "examples", "--all", "--jobs", "4", "--out", str(tmp_path))
    assert code == 0
    assert "FAIL" not in out
    assert (tmp_path / "examples.csv").exists() and (tmp_path / "examples.json").exists()


def test_output_is_deterministic(capsys):
    a = run(capsys, "enumerate", "graph", "--format", "json")[1]
    b = run(capsys, "enumerate", "graph", "--format", "json", "--jobs", "4")[1]
    assert a == b


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "kodaira", "examples", "--list"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "sl23-three-graphs" in res.stdout
