"""Command-line interface: exit codes, report documents, byte stability."""

from __future__ import annotations

import json

from kdcc.cli import EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main
from kdcc.report import SCHEMA

TINY_VERIFY = [
    "verify",
    "--k", "2:3", "--paths", "1:6", "--cycles", "3:6", "--complete", "1:3",
    "--bipartite", "1:2", "--trees", "2,1",
    "--mixed-k", "2:3", "--mixed-paths", "1:5", "--mixed-cycles", "3:5",
    "--mixed-bipartite", "1:2",
]


def test_cv_on_family_spec(capsys):
    assert main(["cv", "path", "7", "--k", "2"]) == EXIT_OK
    out = capsys.readouterr()
    assert "cv(Path(7), k=2) = 2" in out.out
    assert "closed-form" in out.out
    assert "witness vertices: [2, 5]" in out.out
    assert "elapsed:" in out.err and "elapsed:" not in out.out


def test_cm_and_curve_on_family_specs(capsys):
    assert main(["cm", "cycle", "8", "--k", "2", "--p", "1"]) == EXIT_OK
    assert "cm(Cycle(8), k=2, p=1) = 3" in capsys.readouterr().out
    assert main(["curve", "bipartite", "2", "3", "--k", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "curve(CompleteBipartite(2,3), k=2):" in out
    for point in ("p=0  q=4", "p=1  q=2", "p=2  q=0"):
        assert point in out


def test_gen_file_oracle_round_trip(tmp_path, capsys):
    target = str(tmp_path / "tree.txt")
    assert main(["gen", "perfecttree", "2", "2", "--out", target]) == EXIT_OK
    capsys.readouterr()
    assert main(["cv", target, "--k", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "cv(n=7, m=6, k=2) = 2" in out
    assert "oracle" in out


def test_gen_to_stdout(capsys):
    assert main(["gen", "path", "3"]) == EXIT_OK
    assert capsys.readouterr().out == "n=3\n0 1\n1 2\n"


def test_oracle_and_packing_verbs(capsys):
    assert main(["oracle", "path", "7", "--k", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "min_vertex = 2" in out and "min_edge = 3" in out
    assert main(["oracle", "path", "7", "--k", "2", "--p", "1"]) == EXIT_OK
    assert "min_mixed(p=1) = 1" in capsys.readouterr().out
    assert main(["packing", "path", "7", "--k", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "packing size = 2" in out and "certified maximum" in out
    assert main(["packing", "path", "7", "--k", "2", "--greedy"]) == EXIT_OK
    assert "greedy" in capsys.readouterr().out


def test_json_report_schema_and_byte_stability(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    for path in (first, second):
        assert main(["cv", "cycle", "9", "--k", "2", "--json", str(path)]) == EXIT_OK
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()
    doc = json.loads(first.read_text())
    assert doc["schema"] == SCHEMA
    assert doc["command"] == "cv"
    assert doc["input"] == {"kind": "family", "family": "cycle", "params": [9]}
    result = doc["results"][0]
    assert result["value"] == 3
    assert result["provenance"] == "closed-form"
    assert sorted(result["witness"]["vertices"]) == result["witness"]["vertices"]
    assert "elapsed" not in json.dumps(doc)


def test_usage_errors_exit_one(capsys):
    assert main([]) == EXIT_USAGE
    assert main(["cv", "path", "7"]) == EXIT_USAGE  # --k missing
    assert main(["cv", "path", "--k", "2"]) == EXIT_USAGE  # bad arity
    assert main(["cv", "heptagon", "7", "--k", "2"]) == EXIT_USAGE
    assert main(["cv", "path", "7", "--k", "1"]) == EXIT_USAGE  # closed forms need k >= 2
    assert main(["cm", "path", "7", "--k", "2", "--p", "5"]) == EXIT_USAGE
    assert main(["cm", "perfecttree", "2", "2", "--k", "2", "--p", "0"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "kdcc: error:" in err


def test_limit_exceeded_exits_three(capsys, monkeypatch):
    assert main(["oracle", "path", "25", "--k", "2"]) == EXIT_LIMIT
    assert "limit exceeded" in capsys.readouterr().err
    monkeypatch.setenv("KDCC_LIMIT_N", "3")
    assert main(["oracle", "path", "7", "--k", "2"]) == EXIT_LIMIT
    monkeypatch.setenv("KDCC_LIMIT_N", "7")
    assert main(["oracle", "path", "7", "--k", "2"]) == EXIT_OK
    capsys.readouterr()
    # an explicit flag beats the environment
    monkeypatch.setenv("KDCC_LIMIT_N", "3")
    assert main(["oracle", "path", "7", "--k", "2", "--limit-n", "7"]) == EXIT_OK
    capsys.readouterr()


def test_verify_tiny_ranges_pass(capsys):
    assert main(TINY_VERIFY + ["--seed", "7"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "0 mismatches" in out
    assert "lemmas seed=7" in out


def test_verify_json_report(tmp_path, capsys):
    path = tmp_path / "verify.json"
    assert main(TINY_VERIFY + ["--no-mixed", "--json", str(path)]) == EXIT_OK
    capsys.readouterr()
    doc = json.loads(path.read_text())
    assert doc["schema"] == SCHEMA
    assert doc["command"] == "verify"
    assert doc["summary"]["mismatches"] == 0
    assert doc["summary"]["rows"] == len(doc["rows"])
    assert all(row["status"] == "ok" for row in doc["rows"])


def test_curve_on_file_uses_oracle(tmp_path, capsys):
    target = str(tmp_path / "c6.txt")
    assert main(["gen", "cycle", "6", "--out", target]) == EXIT_OK
    capsys.readouterr()
    assert main(["curve", target, "--k", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "p=0  q=3" in out and "oracle" in out


def test_help_exits_zero(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "usage" in capsys.readouterr().out.lower()
    assert main(["cv", "--help"]) == EXIT_OK
    capsys.readouterr()
