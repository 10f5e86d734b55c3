from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from psik.cayley import build_cayley, save_cayley
from psik.cli import EXIT_INVALID, EXIT_OK, EXIT_USAGE, EXIT_VIOLATED, main
from psik.groups import Dicyclic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def jsonl(text: str):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


@pytest.mark.parametrize(
    "spec, k, value",
    [("D18", 1, "219"), ("C4*C3*C3", 1, "275"), ("C1", 9, "1"), ("D18", 6, "207357977"), ("C4*C3*C3", 6, "48163081")],
)
def test_compute_json_schema(capsys, spec, k, value):
    code, out, _ = run(capsys, "compute", spec, "--k", str(k), "--format", "json")
    assert code == EXIT_OK
    (rec,) = jsonl(out)
    assert set(rec) == {"group", "order", "k", "psi_k", "route"}
    assert rec["psi_k"] == value and rec["k"] == k
    assert isinstance(rec["order"], str)


def test_compute_big_values_are_exact_strings(capsys):
    code, out, _ = run(capsys, "compute", "C1000003", "--k", "64", "--format", "json")
    (rec,) = jsonl(out)
    assert rec["psi_k"] == str(1 + 1000002 * 1000003**64)
    assert "e+" not in out


def test_compute_table_and_csv(capsys):
    _, out, _ = run(capsys, "compute", "D18")
    assert "219" in out and "closed-form" in out
    _, out, _ = run(capsys, "compute", "D18", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["psi_k"] == "219"
    assert out.splitlines()[1].startswith('"D18"')


def test_parse_error_exit_code_and_caret(capsys):
    code, _, err = run(capsys, "compute", "C4*X")
    assert code == EXIT_INVALID
    assert "     ^" in err
    code, _, err = run(capsys, "compute", "SD(7^1,3,3)")
    assert code == EXIT_INVALID and "a^m" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == EXIT_USAGE
    code, _, err = run(capsys, "verify", "nope")
    assert code == EXIT_USAGE and "main-bound" in err and "all" in err
    code, _, _ = run(capsys, "compute", "C4", "--k", "0")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "search", "reversal")
    assert code == EXIT_USAGE


def test_spectrum_command(capsys):
    _, out, _ = run(capsys, "spectrum", "C4", "--format", "json")
    assert jsonl(out)[0]["spectrum"] == [["1", "1"], ["2", "1"], ["4", "2"]]
    _, out, _ = run(capsys, "spectrum", "SD(7^1,3,2)", "--format", "json")
    assert jsonl(out)[0]["spectrum"] == [["1", "1"], ["3", "14"], ["7", "6"]]
    _, out, _ = run(capsys, "spectrum", "D18", "--format", "csv")
    rows = {r["order"]: r["count"] for r in csv.DictReader(io.StringIO(out))}
    assert rows == {"1": "1", "2": "19", "3": "2", "6": "2", "9": "6", "18": "6"}


def test_verify_tightness(capsys):
    code, out, _ = run(capsys, "verify", "tightness", "--t-max", "99", "--k-max", "8", "--format", "json")
    assert code == EXIT_OK
    recs = jsonl(out)
    assert len(recs) == 50 * 8
    assert {r["verdict"] for r in recs} == {"HOLDS_EQUALITY"}


def test_verify_herzog_36(capsys):
    code, out, _ = run(capsys, "verify", "herzog", "--n", "36", "--format", "json")
    assert code == EXIT_OK
    recs = jsonl(out)
    assert {r["instance"]["group"] for r in recs} >= {"D18", "A[2:2;3:1,1]"}
    assert all(r["verdict"] != "VIOLATED" for r in recs)
    assert all(r["instance"]["coefficients"] == [7, 11] for r in recs)


def test_verify_main_bound_small(capsys):
    code, out, err = run(capsys, "verify", "main-bound", "--n-max", "60", "--k-max", "3", "--summary-only")
    assert code == EXIT_OK and out == "" and "0 violated" in err


def test_violation_exit_code(capsys, tmp_path, monkeypatch):
    import psik.verify as verify

    monkeypatch.setattr(verify, "main_bound_coefficients", lambda k: (1, 1000))
    code, out, _ = run(capsys, "verify", "main-bound", "--n", "12", "--k", "1", "--format", "json")
    assert code == EXIT_VIOLATED
    assert all(r["verdict"] == "VIOLATED" for r in jsonl(out))


def test_search_commands(capsys):
    _, out, _ = run(capsys, "search", "reversal", "--n", "36", "--k-max", "6", "--format", "json")
    assert any(r["g1"] == "D18" and r["k_high"] == 6 for r in jsonl(out))
    _, out, _ = run(capsys, "search", "extremal", "--n", "8", "--k", "1", "--format", "json")
    (rec,) = jsonl(out)
    assert (rec["argmax"], rec["argmin_abelian"]) == ("C8", "A[2:1,1,1]")
    _, out, _ = run(capsys, "search", "worst-ratio", "--n-max", "100", "--k", "1", "--format", "json")
    top = jsonl(out)
    assert top[0]["bound"] == "7/11" and top[0]["at_bound"] is True


def test_environment_overrides(capsys, monkeypatch):
    monkeypatch.setenv("PSIK_K", "6")
    monkeypatch.setenv("PSIK_FORMAT", "json")
    _, out, _ = run(capsys, "compute", "D18")
    assert jsonl(out)[0]["psi_k"] == "207357977"
    _, out, _ = run(capsys, "compute", "D18", "--k", "1")
    assert jsonl(out)[0]["psi_k"] == "219"


def test_file_spec(capsys, tmp_path):
    path = tmp_path / "q8.json"
    save_cayley(build_cayley(Dicyclic(2)), path)
    code, out, _ = run(capsys, "compute", f"file:{path}", "--format", "json", "--cayley-check", "always")
    assert code == EXIT_OK
    rec = jsonl(out)[0]
    assert rec["psi_k"] == "27" and rec["route"] == "bruteforce"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "identity": 0, "table": [[0, 1], [1, 1]]}))
    code, _, err = run(capsys, "compute", f"file:{bad}")
    assert code == EXIT_INVALID and "repeats" in err
    code, _, _ = run(capsys, "compute", f"file:{tmp_path / 'missing.json'}")
    assert code == EXIT_INVALID


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "psik", "compute", "C4*C3*C3", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["psi_k"] == "275"
