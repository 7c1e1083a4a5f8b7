import json
import subprocess
import sys

import pytest

from conftest import LZ2, Z2_RZ2, Z3, Z4
from semicover.cli import main
from semicover.tableio import write_table


@pytest.fixture
def tables(tmp_path):
    paths = {}
    for name, t in [("lz2", LZ2), ("z3", Z3), ("z4", Z4), ("z2rz2", Z2_RZ2)]:
        paths[name] = tmp_path / f"{name}.txt"
        write_table(paths[name], t)
    paths["bad"] = tmp_path / "bad.txt"
    paths["bad"].write_text("2\n0 1\n1 7\n")
    paths["nonassoc"] = tmp_path / "nonassoc.txt"
    paths["nonassoc"].write_text("2\n1 0\n0 0\n")
    return paths


def test_check_lz2(tables, capsys):
    assert main(["check", str(tables["lz2"]), "--partition", "0 1"]) == 0
    out = capsys.readouterr().out
    assert "best cell 0, cov 1 <= n = 2: PASS" in out


def test_check_z4(tables, capsys):
    assert main(["check", str(tables["z4"]), "--partition", "0 1 0 1"]) == 0
    out = capsys.readouterr().out
    assert "cell 0 {0,2}: delta {0,2}, cov 2" in out
    assert "cov 2 <= n = 2: PASS" in out


def test_check_all_partitions(tables, capsys):
    assert main(["check", str(tables["z4"])]) == 0
    assert "15/15 partitions pass" in capsys.readouterr().out


def test_check_input_errors(tables, capsys):
    assert main(["check", str(tables["bad"]), "--partition", "0 1"]) == 1
    err = capsys.readouterr().err
    assert "line 3, column 3" in err
    assert main(["check", str(tables["nonassoc"])]) == 1
    assert "not associative" in capsys.readouterr().err
    assert main(["check", "/nonexistent/table.txt"]) == 1
    assert main(["check", str(tables["z4"]), "--partition", "0 1"]) == 1


def test_witness_theorem1(tables, capsys):
    assert main(["witness", str(tables["z3"]), "--partition", "0 1 1", "--theorem", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["certificate"] == {"cell_index": 1, "K": [0, 1], "bound_claimed": 2,
                                  "provenance": "theorem1"}
    assert [s["case"] for s in out["trace"]] == ["case1", "base"]


def test_witness_theorem2(tables, capsys):
    assert main(["witness", str(tables["lz2"]), "--partition", "0 1", "--theorem", "2"]) == 0
    cert = json.loads(capsys.readouterr().out)["certificate"]
    assert (cert["cell_index"], cert["K"]) == (0, [0])


def test_witness_theorem3_not_applicable(tables, capsys):
    assert main(["witness", str(tables["z3"]), "--partition", "0 1 1", "--theorem", "3"]) == 3
    assert "not applicable" in capsys.readouterr().err
    assert main(["witness", str(tables["lz2"]), "--partition", "0 1", "--theorem", "3"]) == 0


def test_decompose(tables, capsys):
    assert main(["decompose", str(tables["z2rz2"])]) == 0
    out = capsys.readouterr().out
    assert "R = {0,1,2,3}" in out
    assert "E = {0,2}" in out
    assert "a = 0" in out
    assert "H = Ra = {0,1}, identity 0, order 2" in out


def test_enumerate(tmp_path, capsys):
    assert main(["enumerate", "--order", "1"]) == 0
    assert "# 1 semigroups of order 1" in capsys.readouterr().out
    dump = tmp_path / "dump"
    assert main(["enumerate", "--order", "2", "--dump", str(dump)]) == 0
    assert "# 5 semigroups of order 2" in capsys.readouterr().out
    assert len(list(dump.iterdir())) == 5


def test_search(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    assert main(["search", "--orders", "1..2", "--out", str(out)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["records"] == 11 and summary["violations"] == 0
    assert (tmp_path / "r.jsonl.summary.json").exists()
    assert main(["search", "--orders", "3..1", "--out", str(out)]) == 1
    assert main(["search", "--orders", "x", "--out", str(out)]) == 1


def test_module_entry_point(tables):
    proc = subprocess.run([sys.executable, "-m", "semicover", "check", str(tables["lz2"]),
                           "--partition", "0 1"], capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
