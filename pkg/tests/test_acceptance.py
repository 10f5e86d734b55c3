"""Acceptance gate: one test per criterion, each reported as a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py``; the summary lines appear
under "acceptance criteria" at the end of the pytest output.
"""

from __future__ import annotations

import contextlib
import json
import time

from conftest import ACCEPTANCE
from psik.arith import is_prime
from psik.cayley import build_cayley, spectrum_bruteforce
from psik.cli import main
from psik.families import all_semidirect
from psik.groups import Abelian, Cyclic, abelian_components, partitions, spectrum_abelian_p
from psik.psi import psi_abelian_recurrence, psi_abelian_saha, psi_from_spectrum
from psik.search import extremal_over_order
from psik.verify import SuiteConfig, Verdict, main_bound_coefficients, run_suite, theorem_reports


@contextlib.contextmanager
def criterion(number: int, label: str):
    start = time.perf_counter()
    info: dict[str, str] = {}
    try:
        yield info
    except BaseException as exc:
        ACCEPTANCE[number] = (False, f"{label}: {type(exc).__name__}: {str(exc).splitlines()[0][:200] if str(exc) else ''}")
        raise
    elapsed = time.perf_counter() - start
    extra = f", {info['detail']}" if "detail" in info else ""
    ACCEPTANCE[number] = (True, f"{label} ({elapsed:.1f}s{extra})")


def _cli_json(capsys, *argv) -> tuple[int, list[dict]]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.strip()]


def _all_hold(reports, strict: bool = False) -> None:
    assert reports, "no reports produced"
    bad = [r.to_dict() for r in reports if r.verdict is Verdict.VIOLATED]
    assert not bad, f"{len(bad)} violated, first: {bad[0]}"
    if strict:
        loose = [r.to_dict() for r in reports if r.verdict is not Verdict.HOLDS_STRICT]
        assert not loose, f"{len(loose)} not strict, first: {loose[0]}"


def test_criterion_01_counterexample(capsys):
    with criterion(1, "D18 vs Z4xZ3xZ3 reversal via compute") as info:
        start = time.perf_counter()
        values = {}
        for spec in ("D18", "C4*C3*C3"):
            for k in (1, 6):
                code, (rec,) = _cli_json(capsys, "compute", spec, "--k", str(k), "--format", "json")
                assert code == 0
                values[spec, k] = int(rec["psi_k"])
        elapsed = time.perf_counter() - start
        assert values["D18", 1] == 219
        assert values["C4*C3*C3", 1] == 275
        assert values["D18", 6] > values["C4*C3*C3", 6]
        assert elapsed < 1.0, f"took {elapsed:.2f}s"
        info["detail"] = f"psi_6: {values['D18', 6]} > {values['C4*C3*C3', 6]}"


def test_criterion_02_main_bound():
    with criterion(2, "main bound, n <= 500, k <= 8") as info:
        start = time.perf_counter()
        reports = run_suite(SuiteConfig(theorems=("main-bound",), n_max=500, k_max=8))
        elapsed = time.perf_counter() - start
        _all_hold(reports)
        assert {r.instance["k"] for r in reports} == set(range(1, 9))
        assert elapsed < 120, f"took {elapsed:.1f}s"
        info["detail"] = f"{len(reports)} instances"


def test_criterion_03_tightness():
    with criterion(3, "tightness, odd t <= 99, k <= 8") as info:
        reports = run_suite(SuiteConfig(theorems=("tightness",), t_max=99, k_max=8))
        assert len(reports) == 50 * 8
        assert all(r.verdict is Verdict.HOLDS_EQUALITY and r.lhs_scaled == r.rhs_scaled for r in reports)
        info["detail"] = f"{len(reports)} equalities"


def test_criterion_04_herzog():
    with criterion(4, "k = 1 coefficients (7, 11) and k = 1 slice") as info:
        assert main_bound_coefficients(1) == (7, 11)
        reports = run_suite(SuiteConfig(theorems=("herzog",), n_max=500))
        _all_hold(reports)
        assert all(r.instance["coefficients"] == [7, 11] for r in reports)
        info["detail"] = f"{len(reports)} instances"


def test_criterion_05_four_way_agreement():
    with criterion(5, "four-way psi agreement on abelian p-groups") as info:
        start = time.perf_counter()
        count = 0
        for p in (2, 3, 5):
            for m in range(1, 9):
                if p**m > 2000:
                    continue
                for parts in partitions(m):
                    brute = spectrum_bruteforce(build_cayley(Abelian({p: parts})))
                    formula = spectrum_abelian_p(p, parts)
                    for k in range(1, 6):
                        values = {
                            psi_abelian_recurrence(p, parts, k).value,
                            psi_abelian_saha(p, parts, k).value,
                            psi_from_spectrum(formula, k).value,
                            psi_from_spectrum(brute, k).value,
                        }
                        assert len(values) == 1, (p, parts, k, values)
                        count += 1
        elapsed = time.perf_counter() - start
        assert elapsed < 300, f"took {elapsed:.1f}s"
        info["detail"] = f"{count} (p, partition, k) cases"


def test_criterion_06_extremal():
    with criterion(6, "cyclic strict argmax and elementary abelian strict argmin") as info:
        for n in range(2, 501):
            for k in (1, 2, 6):
                ex = extremal_over_order(n, k)
                assert ex.argmax == Cyclic(n) and ex.strict_max, (n, k)
        cases = 0
        for p in range(2, 730):
            if not is_prime(p):
                continue
            m = 1
            while p**m <= 3**6:
                for k in range(1, 6):
                    ex = extremal_over_order(p**m, k, "cyclic,abelian")
                    assert abelian_components(ex.argmin) == {p: (1,) * m} and ex.strict_min, (p, m, k)
                    cases += 1
                m += 1
        info["detail"] = f"{499 * 3} argmax cases, {cases} argmin cases"


def test_criterion_07_strict_bounds():
    with criterion(7, "q-bound, odd-order, cyclic-lower strict over n <= 500, k <= 8") as info:
        counts = {}
        for theorem in ("q-bound", "odd-order", "cyclic-lower"):
            reports = theorem_reports(theorem, SuiteConfig(n_max=500, k_max=8))
            _all_hold(reports, strict=True)
            counts[theorem] = len(reports)
        info["detail"] = ", ".join(f"{t}: {c}" for t, c in counts.items())


def test_criterion_08_inequality_grids():
    with criterion(8, "grid inequalities for the n = 2^a 3^b and prime-power cases") as info:
        cfg = SuiteConfig(ab_max=6, k_max=8, lemma45_p_max=97, lemma45_qs=(2, 3, 5))
        total = 0
        for theorem in ("ineq-4-3", "ineq-4-4", "ineq-4-5"):
            reports = theorem_reports(theorem, cfg)
            _all_hold(reports)
            total += len(reports)
        assert total == 2 * 6 * 6 * 8 + 23 * 3 * 8
        info["detail"] = f"{total} grid points"


def test_criterion_09_product_inequality():
    with criterion(9, "product inequality, |A||B| <= 1000, k <= 4") as info:
        reports = theorem_reports("product-ineq", SuiteConfig(product_max=1000, product_k_max=4, k_max=8))
        _all_hold(reports)
        for r in reports:
            assert (r.verdict is Verdict.HOLDS_EQUALITY) == r.instance["coprime"]
        assert {r.instance["k"] for r in reports} == {1, 2, 3, 4}
        info["detail"] = f"{len(reports)} pairs x k"


def test_criterion_10_semidirect():
    with criterion(10, "semidirect identity and quotient bound vs brute force, |G| <= 2000, k <= 6") as info:
        specs = all_semidirect(2000)
        reports = theorem_reports("semidirect-identity", SuiteConfig(semidirect_max=2000, semidirect_k_max=6))
        _all_hold(reports)
        assert len(reports) == len(specs) * 6 * 2
        for r in reports:
            if r.theorem_id == "quotient-bound":
                a = int(r.instance["group"].rsplit(",", 1)[1].rstrip(")"))
                assert (r.verdict is Verdict.HOLDS_EQUALITY) == (a == 1), r.to_dict()
        info["detail"] = f"{len(specs)} groups"


def test_criterion_11_performance(capsys):
    with criterion(11, "verify main-bound --n-max 10000 --k 3, deterministic") as info:
        outputs = []
        timings = []
        for workers in ("1", "1", "2"):
            start = time.perf_counter()
            code = main(["verify", "main-bound", "--n-max", "10000", "--k", "3",
                         "--workers", workers, "--format", "json"])
            timings.append(time.perf_counter() - start)
            outputs.append(capsys.readouterr().out)
            assert code == 0
        assert outputs[0] == outputs[1] == outputs[2]
        assert max(timings) < 600, f"took {max(timings):.1f}s"
        info["detail"] = f"{outputs[0].count(chr(10))} reports, {max(timings):.1f}s worst run"
