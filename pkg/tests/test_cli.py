from __future__ import annotations

import csv
import io
import json

import pytest

from eaqmds.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_families(capsys):
    code, out, _ = run(capsys, "families")
    assert code == 0 and len(out.strip().splitlines()) == 8
    code, out, _ = run(capsys, "families", "--format", "json")
    assert len(json.loads(out)) == 8
    code, out, _ = run(capsys, "families", "--family", "3", "--format", "json")
    assert [r["id"] for r in json.loads(out)] == [3]


def test_enumerate_family6(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "6", "--q-max", "8", "--oracle", "exhaustive", "--reproducible", "--format", "json")
    recs = json.loads(out)
    assert code == 0 and len(recs) == 2
    assert [(r["n"], r["k"], r["d"], r["c"]) for r in recs] == [(13, 5, 7, 4), (13, 1, 9, 4)]
    assert list(recs[0]) == ["family", "q", "lambda", "n", "k", "d", "c", "singleton_defect", "checks", "delta_repr", "timestamp"]
    assert recs[0]["timestamp"] is None


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "5", "--q-max", "32", "--format", "csv", "--reproducible")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["family", "q", "lambda", "n", "k", "d", "c", "defect", "status"]
    assert len(rows) == 8 and rows[1][3:7] == ["205", "169", "21", "4"]
    assert code == 0


def test_enumerate_family1_row(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "1", "--q-max", "47", "--format", "csv")
    assert "1,47,1,221,168,30,5,0,pass" in out.splitlines()


def test_timestamp_present_without_flag(capsys):
    _, out, _ = run(capsys, "verify", "--family", "6", "--q", "8", "--lambda", "1", "--format", "json")
    assert json.loads(out)[0]["timestamp"]


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--family", "3", "--q", "13", "--lambda", "1", "--oracle", "mds")[0] == 0
    code, _, err = run(capsys, "verify", "--family", "1", "--q", "7", "--lambda", "1")
    assert code == 2 and "logical dimension" in err
    assert run(capsys, "verify", "--family", "3", "--q", "13", "--lambda", "9")[0] == 2
    code, _, err = run(capsys, "verify", "--family", "8", "--q", "64", "--lambda", "4")
    assert code == 1 and "params" in err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--family", "9", "--q-max", "8"])
    assert exc.value.code == 2


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--family", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:7] == ["n", "k", "d", "c", "q", "family", "lambda"]
    assert len(rows) == 13 and rows[-1][:4] == ["281", "204", "42", "5"]
    code, out, _ = run(capsys, "tables", "--family", "1", "--format", "json")
    first = json.loads(out)[0]
    assert first["status"] == "discrepancy" and first["formula"] == {"n": 29, "k": 12, "d": 12, "c": 5}


def test_code_export(capsys, tmp_path):
    out_file = tmp_path / "g.json"
    assert main(["code", "--family", "6", "--q", "8", "--lambda", "1", "--out", str(out_file)]) == 0
    doc = json.loads(out_file.read_text())
    assert len(doc["generator"]) == 7 and doc["generator"][-1] == [1, 0, 0, 0, 0, 0]
    code, out, _ = run(capsys, "code", "--family", "6", "--q", "8", "--lambda", "1", "--emit", "matrices")
    doc2 = json.loads(out)
    assert len(doc2["G"]) == 7 and len(doc2["H"]) == 6
    assert doc2["generator"] == doc["generator"]


def test_code_matrices_budget(capsys):
    code, _, err = run(capsys, "code", "--family", "7", "--q", "512", "--lambda", "1", "--emit", "matrices")
    assert code == 3 and "budget" in err


def test_lemmas(capsys):
    code, out, _ = run(capsys, "lemmas", "--family", "3", "--q-max", "53")
    assert code == 0 and "fail" not in out
    code, out, _ = run(capsys, "lemmas", "--family", "8", "--q-max", "64")
    assert code == 1 and "Z lambda=9" in out
