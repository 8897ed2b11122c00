import json

import pytest

from linrel import is_hermitian
from linrel.cli import main
from linrel.io import read_relation, relation_to_dict, write_json


def test_gen_hermitian_then_check(tmp_path, capsys):
    out = tmp_path / "h.json"
    assert main(["gen", "--n", "3", "--m", "3", "--hermitian", "--dim-mulpart", "1", "--seed", "7", "--out", str(out)]) == 0
    gen_text = capsys.readouterr().out
    assert is_hermitian(read_relation(out))
    assert main(["check", str(out)]) == 0
    check_text = capsys.readouterr().out
    # dims reported by gen and check agree
    assert gen_text.splitlines()[1] == check_text.splitlines()[1]
    assert "hermitian=yes" in check_text


def test_gen_infeasible(capsys):
    assert main(["gen", "--n", "2", "--m", "2", "--dim-mulpart", "3"]) == 2
    assert "exceeds" in capsys.readouterr().err


def test_check_E1(tmp_path, capsys, E1):
    p = tmp_path / "e1.json"
    write_json(relation_to_dict(E1), p)
    assert main(["check", str(p), "--x", "1,0"]) == 0
    text = capsys.readouterr().out
    assert "norm=1\n" in text and "dim T(0)=1" in text
    assert "point_norm=1\n" in text and "graph_norm=2\n" in text
    assert main(["check", str(p), "--x", "0,1"]) == 2


def test_check_identity(tmp_path, capsys):
    p = tmp_path / "id.json"
    p.write_text(json.dumps({"field": "real", "n": 2, "m": 2, "generators": [
        {"x": [[1, 0], [0, 0]], "y": [[1, 0], [0, 0]]},
        {"x": [[0, 0], [1, 0]], "y": [[0, 0], [1, 0]]}]}))
    assert main(["check", str(p)]) == 0
    text = capsys.readouterr().out
    assert "norm=1\n" in text and "class=positive" in text


def test_check_bad_file(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("[]")
    assert main(["check", str(p)]) == 2
    assert main(["check", str(tmp_path / "missing.json")]) == 2


def test_verify_usage_errors():
    assert main(["verify", "--suite", "thm2.3", "--trials", "0"]) == 2
    assert main(["verify", "--suite", "nope"]) == 2
    assert main(["verify", "--dims", "9x9"]) == 2


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    rc = main(["verify", "--suite", "arens,thm2.3", "--suite", "thm3.5", "--trials", "5",
               "--dims", "3x3,2x4", "--seed", "4", "--out", str(out)])
    assert rc == 0
    rep = json.loads(out.read_text())
    assert rep["schema_version"] == 1
    assert list(rep["suites"]) == ["arens", "thm2.3", "thm3.5"]
    assert rep["suites"]["arens"]["trials"] == 10
    assert "PASS arens" in capsys.readouterr().out


def test_verify_failure_exit_code(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--suite", "arens", "--trials", "2", "--tol", "-1", "--out", str(out)]) == 1
    rep = json.loads(out.read_text())
    assert rep["suites"]["arens"]["counterexample"] is not None


def test_demo(tmp_path, capsys):
    out = tmp_path / "d.json"
    assert main(["demo-remark24", "--n-list", "2,4", "--out", str(out)]) == 0
    rows = json.loads(out.read_text())["rows"]
    assert [r["N"] for r in rows] == [2, 4] and all(r["ok"] for r in rows)
    assert main(["demo-remark24", "--n-list", "1"]) == 2


def test_global_flags_before_subcommand(tmp_path):
    out = tmp_path / "g.json"
    assert main(["--field", "real", "--seed", "3", "gen", "--n", "2", "--m", "2", "--out", str(out)]) == 0
    assert read_relation(out).field == "real"
