import json
from contextlib import nullcontext
import subprocess
import sys

import pytest

from trilattice.cli import emit_json, main, random_triangles


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_classify_7_both(capsys):
    report = run_json(capsys, "classify", 7, "--method", "both")
    assert report["is_2_collinear"] is True
    assert report["candidate_as"] == [2, 8, 14]
    assert report["bruteforce"]["is_2_collinear"] is report["theorem"]["is_2_collinear"] is True


@pytest.mark.parametrize("method", ["brute", "theorem"])
def test_classify_single_method(capsys, method):
    report = run_json(capsys, "classify", 3, "--method", method)
    assert report["is_2_collinear"] is False
    assert report["witness"] == [[0, 0], [1, 0], [3, 7]]


def test_analyze(capsys):
    report = run_json(capsys, "analyze", 0, 0, 1, 0, 3, 7)
    assert report["boundary"] == 3
    assert report["interior_pick"] == report["interior_oracle"] == 3
    assert report["interior_points"] == [[1, 1], [1, 2], [2, 4]]
    assert report["collinear"] is False
    assert report["twice_area"] == 7


def test_analyze_negative_coordinates(capsys):
    report = run_json(capsys, "analyze", -3, -2, 4, -1, 0, 5)
    assert report["twice_area"] == 2 * report["interior_pick"] + report["boundary"] - 2


def test_normalize(capsys):
    report = run_json(capsys, "normalize", 0, 0, 2, 1, 1, 8)
    assert report["canonical"] == {"d": 1, "a": 2, "b": 15}
    assert abs(report["witness_map"]["det"]) == 1


def test_totient(capsys):
    assert run_json(capsys, "totient", 15)["value"] == 3
    assert run_json(capsys, "totient", 12, 0)["value"] == 4
    code, out, _ = run(capsys, "totient", 15)
    assert code == 0 and "value: 3" in out


def test_dset_and_witness(capsys):
    assert run_json(capsys, "dset", 15)["members"] == [2, 8, 14]
    w = run_json(capsys, "witness", 10)
    assert w["witness"] == [[0, 0], [1, 0], [5, 21]]
    assert w["boundary"] == 3 and w["interior"] == 10 and w["collinear"] is False
    assert w["points_on_x1"] == 4 and w["bounds_hold"] is True
    none = run_json(capsys, "witness", 4)
    assert none["witness"] is None and "notice" in none


def test_survey_cli(capsys):
    report = run_json(capsys, "survey", 1, 12)
    assert report["two_collinear"] == [1, 2, 4, 7]
    assert [r["k"] for r in report["results"]] == list(range(1, 13))


def test_pick_check(capsys):
    report = run_json(capsys, "pick-check", 40, 7)
    assert report["all_agree"] is True
    assert report["interior_mismatches"] == report["boundary_mismatches"] == 0


def test_random_triangles_reproducible():
    a = [t.as_lists() for t in random_triangles(20, 99)]
    assert a == [t.as_lists() for t in random_triangles(20, 99)]
    assert a != [t.as_lists() for t in random_triangles(20, 100)]
    assert all(abs(c) <= 30 for t in a for v in t for c in v)


@pytest.mark.parametrize(
    "argv, code, tag",
    [
        (["classify", "0"], 2, "invalid_arguments"),
        (["classify", "x"], 2, "invalid_arguments"),
        (["analyze", "0", "0", "1"], 2, "invalid_arguments"),
        (["analyze", "0", "0", "1", "0", str(2**30 + 1), "3"], 2, "invalid_arguments"),
        (["frobnicate"], 2, "invalid_arguments"),
        (["dset", "4"], 3, "domain_error"),
        (["analyze", "0", "0", "1", "1", "2", "2"], 3, "degenerate_triangle"),
        (["classify", "20", "--method", "brute", "--max-k", "10"], 4, "resource_limit"),
        (["survey", "1", "20", "--max-k", "10"], 4, "resource_limit"),
    ],
)
def test_exit_codes(capsys, argv, code, tag):
    with pytest.raises(SystemExit) if code == 2 else nullcontext() as exc:
        got = main(argv)
    if code == 2:
        got = exc.value.code
    _, err = capsys.readouterr()
    assert got == code
    lines = err.strip().splitlines()
    assert len(lines) == 1 and lines[0].startswith(f"error {tag}:")


def test_invariant_failure_exit_code(capsys, monkeypatch):
    import trilattice.cli as cli

    monkeypatch.setattr(cli, "interior_count_pick", lambda t: -1)
    code, _, err = run(capsys, "pick-check", 3, 1)
    assert code == 5 and err.startswith("error invariant_failure:")


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", 0, 0, 1, 0, 3, 7],
        ["normalize", 5, 3, 6, 3, 7, 18],
        ["classify", 7],
        ["classify", 10, "--method", "theorem"],
        ["witness", 5],
        ["witness", 7],
        ["totient", 360, 2],
        ["dset", 21],
        ["survey", 1, 8],
        ["pick-check", 10, 3],
    ],
)
def test_reports_round_trip_and_are_deterministic(capsys, argv):
    first = run_json(capsys, *argv)
    second = run_json(capsys, *argv)
    assert first == second
    assert json.loads(emit_json(first)) == first
    assert emit_json(first) == emit_json(second)

    def no_floats(x):
        if isinstance(x, dict):
            return all(no_floats(v) for v in x.values())
        if isinstance(x, list):
            return all(no_floats(v) for v in x)
        return not isinstance(x, float)

    assert no_floats(first)


def test_out_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "totient", 15, "--out", path)
    assert code == 0 and out.startswith("command: totient")
    assert json.loads(path.read_text()) == {
        "command": "totient", "k": 15, "m": 1, "factorization": [[3, 1], [5, 1]], "value": 3
    }


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "trilattice", "totient", "9", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["value"] == 3
