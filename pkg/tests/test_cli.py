"""
CLI Tests

Validates the orientlab subcommands, their documents and the exit codes
(0 ok, 2 budget, 3 invalid input, 4 verification failure).
"""

import json
import pytest
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.cli import main
from core import constructions
from core.graph_core import cycle_power, parse_graph


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_spectrum_of_octahedron(capsys):
    """
    Validates:
    - spectrum --family cycle-power --n 6 --k 2 reports [4, 6, 7]
    - The gap at 5 and pi_T = 4 are part of the document
    """
    code, out = run(capsys, "spectrum", "--family", "cycle-power", "--n", "6", "--k", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["achievable"] == [4, 6, 7]
    assert doc["fully_orientable"] is False
    assert doc["gaps"] == [5]
    assert doc["d_max_formula"] == 7
    assert doc["pi_t"] == 4
    assert doc["graph"] == {"family": "cycle-power", "params": {"n": 6, "k": 2}, "n": 6, "m": 12}

    print("✓ spectrum reports {4, 6, 7} for C_6^2")


def test_spectrum_of_complete_graph(capsys):
    code, out = run(capsys, "spectrum", "--family", "complete", "--n", "4")
    assert code == 0
    assert json.loads(out)["achievable"] == [3]


def test_spectrum_is_deterministic_apart_from_elapsed_time(capsys):
    docs = []
    for _ in range(2):
        code, out = run(capsys, "spectrum", "--family", "cycle-power", "--n", "7", "--k", "2")
        assert code == 0
        doc = json.loads(out)
        doc.pop("elapsed_ms")
        docs.append(doc)
    assert docs[0] == docs[1]


def test_spectrum_csv(capsys):
    code, out = run(capsys, "spectrum", "--family", "cycle", "--n", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d,count"
    assert lines[1:3] == ["0,6", "1,8"]
    assert lines[-1].startswith("# d_min=0,d_max=1,fully_orientable=true")


def test_spectrum_from_graph_file(capsys, tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text("# K4\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", encoding="utf-8")
    code, out = run(capsys, "spectrum", "--graph", str(path), "--format", "text")
    assert code == 0
    assert "spectrum    [3]" in out
    assert "fully orientable: yes" in out


def test_spectrum_writes_to_a_file(capsys, tmp_path):
    target = tmp_path / "out" / "c7.json"
    code, out = run(capsys, "spectrum", "--family", "cycle-power", "--n", "7", "--k", "2", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["achievable"] == [5, 6, 7, 8]


def test_budget_exceeded_exits_2(capsys):
    code, _ = run(capsys, "spectrum", "--family", "cycle-power", "--n", "12", "--k", "2", "--budget", "1000")
    assert code == 2

    print("✓ Over-budget enumeration exits 2")


@pytest.mark.parametrize("n", [2000, 15000])
def test_huge_cycle_exits_2(capsys, n):
    """Work estimates far past 2^4096 are refused without printing them in full."""
    code, out = run(capsys, "spectrum", "--family", "cycle", "--n", str(n))
    assert code == 2
    assert out == ""


def test_huge_complete_graph_is_refused_before_it_is_built(capsys):
    code, _ = run(capsys, "spectrum", "--family", "complete", "--n", "100000")
    assert code == 2

    code, _ = run(capsys, "spectrum", "--family", "multipartite", "--r", "1000", "--n", "1000")
    assert code == 2

    print("✓ Huge family members exit 2 without generating their edges")


def test_unreadable_graph_files_exit_3(capsys, tmp_path):
    assert main(["spectrum", "--graph", str(tmp_path / "missing.txt")]) == 3

    binary = tmp_path / "binary.txt"
    binary.write_bytes(b"3 1\n0 \xff\n")
    assert main(["spectrum", "--graph", str(binary)]) == 3

    assert main(["spectrum", "--graph", str(tmp_path)]) == 3

    print("✓ Missing, non-UTF-8 and directory graph files exit 3")


def test_spectrum_json_field_names(capsys):
    code, out = run(capsys, "spectrum", "--family", "cycle", "--n", "5")
    assert code == 0
    assert list(json.loads(out)) == [
        "graph", "strategy", "enumerated", "achievable", "counts", "d_min", "d_max",
        "d_max_formula", "pi_t", "fully_orientable", "gaps", "elapsed_ms",
    ]


@pytest.mark.parametrize("argv", [
    ["spectrum", "--family", "cycle-power", "--n", "6"],
    ["spectrum", "--family", "cycle", "--n", "2"],
    ["spectrum"],
    ["gen", "--family", "cycle", "--n", "3..5"],
    ["verify", "--n", "6"],
    ["construct", "--n", "5"],
    ["probe-alpha", "--k", "1", "--n", "5"],
])
def test_invalid_input_exits_3(capsys, argv):
    assert main(argv) == 3


@pytest.mark.parametrize("argv", [
    ["spectrum", "--family", "petersen", "--n", "10"],
    ["spectrum", "--family", "cycle", "--n", "5", "--budget", "0"],
    ["verify"],
    [],
])
def test_argument_errors_exit_3(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 3


def test_verify_seven(capsys):
    code, out = run(capsys, "verify", "--n", "7")
    assert code == 0
    report = json.loads(out)
    assert report["n"] == 7
    assert [c["status"] for c in report["clauses"]] == ["pass", "pass", "pass"]

    print("✓ verify --n 7 passes every clause")


def test_verify_large_n_with_dot_files(capsys, tmp_path):
    code, out = run(capsys, "verify", "--n", "60", "--format", "text", "--dot-dir", str(tmp_path))
    assert code == 0
    assert "[PASS] min_deletion" in out
    assert "enumeration skipped" in out
    assert len(list(tmp_path.glob("*.dot"))) == 60 + 2 - 31


def test_verification_failure_exits_4(capsys, monkeypatch):
    monkeypatch.setattr(constructions, "expected_d0_dependents", lambda n: frozenset())
    code, out = run(capsys, "verify", "--n", "8")
    assert code == 4
    report = json.loads(out)
    assert report["clauses"][-1]["status"] == "fail"

    print("✓ A failed clause exits 4 with the partial report")


def test_construct_d0_and_dmax(capsys):
    code, out = run(capsys, "construct", "--n", "8", "--which", "d0")
    assert code == 0
    doc = json.loads(out)
    assert doc["d"] == 5
    assert doc["dependent_arcs"] == [[1, 7], [2, 0], [2, 3], [4, 5], [6, 7]]

    code, out = run(capsys, "construct", "--n", "8", "--which", "dmax", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph dmax {")
    assert out.count("class=dependent") == 9


def test_construct_sequence(capsys, tmp_path):
    code, out = run(capsys, "construct", "--n", "9")
    assert code == 0
    doc = json.loads(out)
    assert doc["targets"] == [6, 7, 8, 9, 10]
    assert [e["d"] for e in doc["entries"]] == doc["targets"]

    code, out = run(capsys, "construct", "--n", "9", "--format", "text")
    assert "s=2k+1" in out

    code, _ = run(capsys, "construct", "--n", "9", "--format", "dot", "--out", str(tmp_path / "dots"))
    assert code == 0
    assert sorted(p.name for p in (tmp_path / "dots").glob("*.dot"))[0] == "c9sq_00_d6.dot"


def test_gen_round_trips(capsys):
    code, out = run(capsys, "gen", "--family", "cycle-power", "--n", "9", "--k", "2")
    assert code == 0
    assert parse_graph(out) == cycle_power(9, 2)

    code, out = run(capsys, "gen", "--family", "multipartite", "--r", "4", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["n"] == 8
    assert doc["m"] == 24

    print("✓ gen output parses back to the same graph")


def test_survey(capsys):
    code, out = run(capsys, "survey", "--family", "cycle-power", "--k", "2", "--n", "6..8", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("family,n,m,d_min,d_max")
    assert lines[1] == "cycle-power,6,12,4,7,7,4,false,5,ok"
    assert lines[2] == "cycle-power,7,14,5,8,8,4,true,,ok"


def test_survey_skips_huge_members_from_their_parameters(capsys):
    code, out = run(capsys, "survey", "--family", "complete", "--n", "99999..100000", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1] == "complete,99999,4999850001,,,4999750003,,,,skipped"
    assert lines[2].endswith(",skipped")


def test_probe_alpha_k2(capsys):
    code, out = run(capsys, "probe-alpha", "--k", "2", "--n", "6..8")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [row["fully_orientable"] for row in rows] == [False, True, True]
    assert [row["marked"] for row in rows] == [True, False, False]


def test_probe_alpha_k3_marks_the_cocktail_party_graph(capsys):
    """C_8^3 is K_4(2) and is not fully orientable."""
    code, out = run(capsys, "probe-alpha", "--k", "3", "--n", "8")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["marked"] is True
    assert row["fully_orientable"] is False
    assert row["note"] == "isomorphic to K_4(2)"

    print("✓ probe-alpha marks C_8^3 as not fully orientable")


def test_probe_alpha_all_skipped_exits_2(capsys):
    code, _ = run(capsys, "probe-alpha", "--k", "2", "--n", "30..31", "--budget", "100")
    assert code == 2
