import io
import json
import subprocess
import sys

import pytest

from status_lab.cli import main
from status_lab.families import make_dumbbell
from status_lab.graph import parse_edgelist, to_edgelist


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_then_compute(capsys, monkeypatch):
    code, edgelist, _ = run(["construct", "A", "8", "3"], capsys)
    assert code == 0 and edgelist.startswith("8 7\n")
    code, out, _ = run(["compute"], capsys, stdin=edgelist, monkeypatch=monkeypatch)
    assert code == 0
    assert "min_status: 9" in out
    assert "median: 0" in out
    assert "proximity: 9/7 (1.285714)" in out
    assert "matching: 3" in out and "domination: 3" in out and "diameter: 4" in out


def test_compute_json_and_file_round_trip(tmp_path, capsys):
    path = tmp_path / "d.el"
    path.write_text(to_edgelist(make_dumbbell(8, 3, 2)))
    code, out, _ = run(["compute", "--in", str(path), "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["min_status"] == 12 and data["proximity"] == "12/7"
    code, out, _ = run(["construct", "dumbbell", "8", "3", "2", "--out", str(tmp_path / "c.el")], capsys)
    assert parse_edgelist((tmp_path / "c.el").read_text()) == make_dumbbell(8, 3, 2)


def test_compute_cycle(capsys, monkeypatch):
    code, out, _ = run(["compute"], capsys, stdin="5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n", monkeypatch=monkeypatch)
    assert code == 0 and "min_status: 6" in out and "median: 0 1 2 3 4" in out and "proximity: 3/2" in out


@pytest.mark.parametrize(
    "argv, value",
    [
        (["bound", "match-lower", "8", "3"], "9"),
        (["bound", "match-upper", "8", "3"], "15"),
        (["bound", "dom-upper-small", "10", "3"], "24"),
        (["bound", "dom-upper-large", "8", "4"], "12"),
        (["bound", "order", "7"], "12"),
    ],
)
def test_bound(argv, value, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0 and out == value + "\n"


def test_bound_rejects_outside_hypothesis(capsys):
    code, out, err = run(["bound", "dom-upper-large", "10", "4"], capsys)
    assert code == 1 and out == "" and err.startswith("error:")


def test_usage_errors_exit_one(capsys):
    assert run(["frobnicate"], capsys)[0] == 1
    code, _, err = run(["construct", "hexagon", "6"], capsys)
    assert code == 1 and err.startswith("error:")


def test_bad_input_exit_one(capsys, monkeypatch):
    code, _, err = run(["compute"], capsys, stdin="3 1\n0 1\n", monkeypatch=monkeypatch)
    assert code == 1 and "Disconnected" in err


def test_transform_contract(capsys, monkeypatch):
    code, out, _ = run(["transform", "contract", "1", "2"], capsys, stdin="4 3\n0 1\n1 2\n2 3\n", monkeypatch=monkeypatch)
    g = parse_edgelist(out)
    assert code == 0 and sorted(g.degree(u) for u in range(4)) == [1, 1, 1, 3]


def test_transform_move_and_shifts(capsys, monkeypatch):
    spider = "7 6\n0 1\n1 2\n2 3\n0 4\n4 5\n0 6\n"
    code, out, _ = run(["transform", "move", "0", "5", "6"], capsys, stdin=spider, monkeypatch=monkeypatch)
    assert code == 0 and parse_edgelist(out).has_edge(5, 6)
    code, out, _ = run(["transform", "dumbbell-shift", "10", "2", "2"], capsys)
    assert code == 0 and parse_edgelist(out) == make_dumbbell(10, 3, 1)
    code, _, _ = run(["transform", "caterpillar-shift", "12", "3", "1"], capsys)
    assert code == 0
    code, _, err = run(["transform", "dumbbell-shift", "10", "2", "1"], capsys)
    assert code == 1 and "InvalidParams" in err


def test_transform_pendant_edge_rejected(capsys, monkeypatch):
    code, _, err = run(["transform", "contract", "0", "1"], capsys, stdin="3 2\n0 1\n1 2\n", monkeypatch=monkeypatch)
    assert code == 1 and "PendantEdge" in err


def test_transform_violation_exits_three(capsys, monkeypatch):
    import status_lab.cli as cli

    monkeypatch.setattr(cli, "contract_to_pendant", lambda g, e: g)
    code, _, err = run(["transform", "contract", "1", "2"], capsys, stdin="4 3\n0 1\n1 2\n2 3\n", monkeypatch=monkeypatch)
    assert code == 3 and err.startswith("error:")


def test_enumerate(capsys, monkeypatch):
    code, out, _ = run(["enumerate", "7", "--count-only"], capsys)
    assert code == 0 and out == "11\n"
    code, out, _ = run(["enumerate", "4"], capsys)
    lines = out.splitlines()
    assert len(lines) == 2 and all(line.startswith("4 3 ") for line in lines)
    assert {parse_edgelist(line).edge_count for line in lines} == {3}
    code, out, _ = run(["enumerate", "5", "--graphs", "--count-only"], capsys)
    assert out == "21\n"
    monkeypatch.setenv("STATUS_LAB_MAX_N", "8")
    assert run(["enumerate", "9", "--count-only"], capsys)[0] == 1


def test_verify_all(capsys):
    code, out, _ = run(["verify", "--theorem", "all", "--n-lo", "4", "--n-hi", "12", "--jobs", "1"], capsys)
    assert code == 0
    assert len(out.splitlines()) == 8 and all("PASS" in line for line in out.splitlines())


def test_verify_json_single(capsys):
    code, out, _ = run(["verify", "--theorem", "MatchLower", "--n-lo", "4", "--n-hi", "7", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and len(data) == 1 and data[0]["theorem_id"] == "MatchLower"


def test_verify_failure_exits_two(capsys, monkeypatch):
    import status_lab.families as fam

    monkeypatch.setattr(fam, "bound_order", lambda n: n * n // 4 - 1)
    code, out, _ = run(["verify", "--theorem", "OrderBound", "--n-lo", "3", "--n-hi", "5"], capsys)
    assert code == 2 and "FAIL" in out


def test_verify_budget(capsys, monkeypatch):
    assert run(["verify", "--n-hi", "13"], capsys)[0] == 1
    monkeypatch.setenv("STATUS_LAB_MAX_N", "6")
    assert run(["verify", "--n-hi", "7"], capsys)[0] == 1


def test_output_is_byte_identical(capsys):
    first = run(["verify", "--n-lo", "4", "--n-hi", "9", "--format", "json", "--jobs", "1"], capsys)[1]
    second = run(["verify", "--n-lo", "4", "--n-hi", "9", "--format", "json", "--jobs", "1"], capsys)[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "status_lab", "bound", "order", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "6\n"
