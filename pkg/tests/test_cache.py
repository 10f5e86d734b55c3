from __future__ import annotations

import json

from psik.cache import PsiCache, cache_key
from psik.cli import EXIT_INVALID, EXIT_OK, main
from psik.groups import AbelianPPrimary, Cyclic, Dihedral, DirectProduct
from psik.psi import psi


def test_key_uses_canonical_text():
    a = DirectProduct((Cyclic(3), Dihedral(3)))
    b = DirectProduct((Dihedral(3), Cyclic(3)))
    assert cache_key(a, 2) == cache_key(b, 2) == "C3*D3|k=2"
    assert cache_key(AbelianPPrimary(2, (1, 1)), 1) == "A[2:1,1]|k=1"


def test_hits_equal_recomputation(tmp_path):
    path = tmp_path / "psi.jsonl"
    cache = PsiCache(path)
    specs = [Dihedral(18), DirectProduct((Cyclic(4), Cyclic(3), Cyclic(3))), Cyclic(97)]
    first = [cache.psi(s, k).value for s in specs for k in (1, 6)]
    assert len(path.read_text().splitlines()) == 6
    again = PsiCache(path)
    assert len(again) == 6
    second = [again.psi(s, k).value for s in specs for k in (1, 6)]
    assert first == second == [psi(s, k).value for s in specs for k in (1, 6)]
    assert len(path.read_text().splitlines()) == 6


def test_unreadable_lines_are_skipped(tmp_path, caplog):
    path = tmp_path / "psi.jsonl"
    path.write_text('not json\n{"key": "D18|k=1"}\n{"key": "C4|k=1", "value": "x", "route": "r"}\n\n')
    cache = PsiCache(path)
    assert len(cache) == 0 and cache.skipped == 3
    assert "skipping" in caplog.text
    assert cache.psi(Dihedral(18), 1).value == 219


def test_verify_cache_rejects_tampered_entries(tmp_path):
    path = tmp_path / "psi.jsonl"
    path.write_text(json.dumps({"key": "D18|k=1", "value": "220", "route": "closed-form"}) + "\n")
    trusting = PsiCache(path)
    assert trusting.psi(Dihedral(18), 1).value == 220  # a plain hit is trusted
    checking = PsiCache(path, verify=True)
    assert checking.psi(Dihedral(18), 1).value == 219
    assert checking.mismatches == ["D18|k=1"]
    assert PsiCache(path).verify_all() == []  # the corrected entry was appended last


def test_cli_cache_round_trip(tmp_path, capsys):
    path = tmp_path / "c.jsonl"
    outs = []
    for _ in range(2):
        assert main(["compute", "D18", "--k", "6", "--format", "json", "--cache", str(path)]) == EXIT_OK
        outs.append(capsys.readouterr().out)
    assert main(["compute", "D18", "--k", "6", "--format", "json"]) == EXIT_OK
    outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2]
    assert main(["cache", "verify", "--cache", str(path)]) == EXIT_OK
    path.write_text(json.dumps({"key": "D18|k=6", "value": "1", "route": "x"}) + "\n")
    assert main(["cache", "verify", "--cache", str(path)]) == EXIT_INVALID
    assert main(["cache", "stats", "--cache", str(path)]) == EXIT_OK
    assert "1" in capsys.readouterr().out
