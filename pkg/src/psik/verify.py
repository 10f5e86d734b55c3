"""Exact checkers for the bounds, identities and inequalities on psi_k.

Every checker returns :class:`BoundReport` objects whose claim has the form
``lhs_scaled REL rhs_scaled`` with REL one of ``<``, ``<=`` or ``==``; ratios
are cleared of denominators before comparing, so no verdict ever touches a
float.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable

from .arith import factorize, geometric_sum, is_prime
from .cayley import spectrum_semidirect_bruteforce
from .families import (
    all_semidirect,
    families_of_order,
    nilpotent_candidates,
    noncyclic_families,
    parse_families,
)
from .groups import (
    Abelian,
    Cyclic,
    DirectProduct,
    GroupSpec,
    SemidirectCyclic,
    abelian_components,
    is_cyclic,
    partitions,
    spectrum,
    spectrum_product,
)
from .psi import check_k, psi, psi_cyclic, psi_from_spectrum
from .syntax import render

THEOREM_IDS = (
    "main-bound",
    "herzog",
    "max-cyclic",
    "min-prime-exponent",
    "q-bound",
    "odd-order",
    "cyclic-lower",
    "tightness",
    "ineq-4-3",
    "ineq-4-4",
    "ineq-4-5",
    "product-ineq",
    "semidirect-identity",
)
# report ids that only appear as companions of a suite theorem
EXTRA_REPORT_IDS = ("quotient-bound", "min-nilpotent")
_ORDER = {tid: i for i, tid in enumerate(THEOREM_IDS + EXTRA_REPORT_IDS)}


class UsageError(ValueError):
    """A checker was called outside its hypotheses (e.g. a cyclic group)."""


class Verdict(enum.Enum):
    HOLDS_STRICT = "HOLDS_STRICT"
    HOLDS_EQUALITY = "HOLDS_EQUALITY"
    VIOLATED = "VIOLATED"


def judge(lhs: int, rhs: int, relation: str) -> Verdict:
    if relation == "==":
        return Verdict.HOLDS_EQUALITY if lhs == rhs else Verdict.VIOLATED
    if lhs < rhs:
        return Verdict.HOLDS_STRICT
    if lhs == rhs and relation == "<=":
        return Verdict.HOLDS_EQUALITY
    return Verdict.VIOLATED


@dataclass(frozen=True)
class BoundReport:
    theorem_id: str
    instance: dict[str, Any]
    lhs_scaled: int
    rhs_scaled: int
    relation: str
    verdict: Verdict = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "verdict", judge(self.lhs_scaled, self.rhs_scaled, self.relation))

    @property
    def margin(self) -> int:
        return abs(self.rhs_scaled - self.lhs_scaled)

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.VIOLATED

    def sort_key(self):
        inst = self.instance
        return (_ORDER.get(self.theorem_id, len(_ORDER)), inst.get("n", 0), inst.get("k", 0))

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem_id,
            "instance": self.instance,
            "relation": self.relation,
            "lhs_scaled": str(self.lhs_scaled),
            "rhs_scaled": str(self.rhs_scaled),
            "margin": str(self.margin),
            "verdict": self.verdict.value,
        }


def main_bound_coefficients(k: int) -> tuple[int, int]:
    """(numerator, denominator) of the non-cyclic bound: (1 + 3*2^k, 1 + 2^k + 2*4^k)."""
    return 1 + 3 * 2**k, 1 + 2**k + 2 * 4**k


def _require_noncyclic(spec: GroupSpec) -> None:
    if is_cyclic(spec):
        raise UsageError(f"{render(spec)} is cyclic: it is isomorphic to C{spec.order}")


def _inst(spec: GroupSpec, k: int, **extra) -> dict[str, Any]:
    return {"group": render(spec), "n": spec.order, "k": k, **extra}


def check_main_bound(spec: GroupSpec, k: int) -> BoundReport:
    check_k(k)
    _require_noncyclic(spec)
    num, den = main_bound_coefficients(k)
    n = spec.order
    return BoundReport(
        "main-bound",
        _inst(spec, k, coefficients=[num, den]),
        den * psi(spec, k).value,
        num * psi_cyclic(n, k),
        "<=",
    )


def check_herzog_k1(spec: GroupSpec) -> BoundReport:
    num, den = main_bound_coefficients(1)
    if (num, den) != (7, 11):
        raise AssertionError(f"k = 1 coefficients are {(num, den)}, expected (7, 11)")
    report = check_main_bound(spec, 1)
    return BoundReport("herzog", report.instance, report.lhs_scaled, report.rhs_scaled, "<=")


def check_max_at_cyclic(n: int, k: int, families=None) -> list[BoundReport]:
    """One strict comparison psi_k(G) < psi_k(Z_n) per non-cyclic instance of order n."""
    if n < 2:
        raise UsageError("check_max_at_cyclic needs n >= 2")
    check_k(k)
    top = psi_cyclic(n, k)
    return [
        BoundReport("max-cyclic", _inst(g, k), psi(g, k).value, top, "<")
        for g in noncyclic_families(n, families)
    ]


def check_min_prime_exponent(p: int, m: int, k: int) -> list[BoundReport]:
    """The elementary abelian group is the strict psi_k minimizer among abelian p-groups of order p^m."""
    check_k(k)
    if not is_prime(p) or m < 1:
        raise UsageError(f"need a prime p and m >= 1, got p={p}, m={m}")
    low = Abelian({p: (1,) * m})
    low_value = psi(low, k).value
    reports = []
    for parts in partitions(m):
        if parts == (1,) * m:
            continue
        other = Abelian({p: parts})
        reports.append(
            BoundReport(
                "min-prime-exponent",
                _inst(other, k, minimizer=render(low), p=p, m=m),
                low_value,
                psi(other, k).value,
                "<",
            )
        )
    return reports


def _has_prime_exponent_sylows(spec: GroupSpec) -> bool:
    comps = abelian_components(spec)
    return comps is not None and all(set(parts) == {1} for parts in comps.values())


def check_min_nilpotent(n: int, k: int) -> list[BoundReport]:
    """Among products of supported Sylow factors of order n, prime-exponent Sylows minimize psi_k."""
    check_k(k)
    cands = nilpotent_candidates(n)
    low = next(g for g in cands if _has_prime_exponent_sylows(g))
    low_value = psi(low, k).value
    return [
        BoundReport(
            "min-nilpotent", _inst(g, k, minimizer=render(low)), low_value, psi(g, k).value, "<"
        )
        for g in cands
        if g is not low
    ]


def smallest_prime(n: int) -> int:
    return factorize(n).primes[0]


def check_q_bound(spec: GroupSpec, k: int) -> BoundReport:
    check_k(k)
    _require_noncyclic(spec)
    n = spec.order
    q = smallest_prime(n)
    return BoundReport(
        "q-bound", _inst(spec, k, q=q), (q - 1) ** k * psi(spec, k).value, psi_cyclic(n, k), "<"
    )


def check_odd_order(spec: GroupSpec, k: int) -> BoundReport:
    check_k(k)
    if spec.order % 2 == 0:
        raise UsageError(f"{render(spec)} has even order {spec.order}")
    _require_noncyclic(spec)
    return BoundReport(
        "odd-order", _inst(spec, k), 2**k * psi(spec, k).value, psi_cyclic(spec.order, k), "<"
    )


def check_cyclic_lower_bound(n: int, k: int) -> BoundReport:
    """q^k n^(k+1) < (1 + p + ... + p^k) psi_k(Z_n) for smallest/largest primes q, p of n."""
    check_k(k)
    if n < 2:
        raise UsageError("check_cyclic_lower_bound needs n >= 2")
    primes = factorize(n).primes
    q, p = primes[0], primes[-1]
    return BoundReport(
        "cyclic-lower",
        {"group": f"C{n}", "n": n, "k": k, "q": q, "p": p},
        q**k * n ** (k + 1),
        geometric_sum(p, k) * psi_cyclic(n, k),
        "<",
    )


def check_tightness(t: int, k: int) -> BoundReport:
    """Z_t x Z_2 x Z_2 against Z_4t for odd t, both sides through the spectrum route."""
    check_k(k)
    if t < 1 or t % 2 == 0:
        raise UsageError(f"tightness needs an odd positive t, got {t}")
    num, den = main_bound_coefficients(k)
    g = DirectProduct((Cyclic(t), Cyclic(2), Cyclic(2)))
    lhs = den * psi_from_spectrum(spectrum(g), k).value
    rhs = num * psi_from_spectrum(spectrum(Cyclic(4 * t)), k).value
    return BoundReport("tightness", _inst(g, k, t=t), lhs, rhs, "==")


def _check_ab(a: int, b: int, k: int):
    check_k(k)
    if a < 1 or b < 1:
        raise UsageError(f"need a, b >= 1, got a={a}, b={b}")
    return 2**a * 3**b


def check_ineq_lemma_4_3(a: int, b: int, k: int) -> BoundReport:
    """psi_k(Z_{n/2}) + (n/2)(n/3)^k <= coefficient * psi_k(Z_n) for n = 2^a 3^b."""
    n = _check_ab(a, b, k)
    num, den = main_bound_coefficients(k)
    lhs = psi_cyclic(n // 2, k) + (n // 2) * (n // 3) ** k
    return BoundReport(
        "ineq-4-3", {"n": n, "k": k, "a": a, "b": b}, den * lhs, num * psi_cyclic(n, k), "<="
    )


def check_ineq_lemma_4_4(a: int, b: int, k: int) -> BoundReport:
    """psi_k(Z_{n/3}) + (2n/3)(n/3)^k <= coefficient * psi_k(Z_n) for n = 2^a 3^b."""
    n = _check_ab(a, b, k)
    num, den = main_bound_coefficients(k)
    lhs = psi_cyclic(n // 3, k) + (2 * n // 3) * (n // 3) ** k
    return BoundReport(
        "ineq-4-4", {"n": n, "k": k, "a": a, "b": b}, den * lhs, num * psi_cyclic(n, k), "<="
    )


def check_ineq_lemma_4_5(p: int, q: int, k: int) -> BoundReport:
    """k-th power form: (1 + 2*4^k + 2^k)(1 + p + ... + p^k) < (1 + 3*2^k) q^k p^k."""
    check_k(k)
    if not is_prime(p) or p <= 3:
        raise UsageError(f"p must be a prime > 3, got {p}")
    if not is_prime(q):
        raise UsageError(f"q must be a prime, got {q}")
    num, den = main_bound_coefficients(k)
    return BoundReport(
        "ineq-4-5",
        {"k": k, "p": p, "q": q},
        den * geometric_sum(p, k),
        num * q**k * p**k,
        "<",
    )


def check_product_inequality(a: GroupSpec, b: GroupSpec, k: int) -> BoundReport:
    """psi_k(A x B) <= psi_k(A) psi_k(B), with equality exactly for coprime orders.

    The product side is computed by lcm-convolution of spectra.
    """
    check_k(k)
    coprime = math.gcd(a.order, b.order) == 1
    lhs = psi_from_spectrum(spectrum_product(spectrum(a), spectrum(b)), k).value
    return BoundReport(
        "product-ineq",
        {"group": f"{render(a)} x {render(b)}", "n": a.order * b.order, "k": k,
         "a": render(a), "b": render(b), "coprime": coprime},
        lhs,
        psi(a, k).value * psi(b, k).value,
        "==" if coprime else "<",
    )


def semidirect_psi_bruteforce(spec: SemidirectCyclic, k: int) -> int:
    return psi_from_spectrum(spectrum_semidirect_bruteforce(spec), k).value


def check_semidirect_identity(spec: SemidirectCyclic, k: int, brute: int | None = None) -> BoundReport:
    """Brute-force psi_k(G) against psi_k(P) psi_k(Z) + |P| (psi_k(F) - psi_k(Z))."""
    check_k(k)
    if brute is None:
        brute = semidirect_psi_bruteforce(spec, k)
    psi_p = psi_cyclic(spec.q, k)
    psi_z = psi_cyclic(spec.kernel_order, k)
    psi_f = psi_cyclic(spec.m, k)
    formula = psi_p * psi_z + spec.q * (psi_f - psi_z)
    return BoundReport(
        "semidirect-identity",
        _inst(spec, k, kernel_order=spec.kernel_order),
        brute,
        formula,
        "==",
    )


def check_quotient_bound(spec: SemidirectCyclic, k: int, brute: int | None = None) -> BoundReport:
    """psi_k(G) <= psi_k(P) psi_k(G/P) with G/P = F; equality exactly for the trivial action."""
    check_k(k)
    if brute is None:
        brute = semidirect_psi_bruteforce(spec, k)
    trivial = spec.kernel_order == spec.m
    return BoundReport(
        "quotient-bound",
        _inst(spec, k, trivial_action=trivial),
        brute,
        psi_cyclic(spec.q, k) * psi_cyclic(spec.m, k),
        "==" if trivial else "<",
    )


def semidirect_reports(spec: SemidirectCyclic, ks: Iterable[int]) -> list[BoundReport]:
    s = spectrum_semidirect_bruteforce(spec)
    out = []
    for k in ks:
        brute = psi_from_spectrum(s, k).value
        out.append(check_semidirect_identity(spec, k, brute))
        out.append(check_quotient_bound(spec, k, brute))
    return out


@dataclass
class SuiteConfig:
    theorems: tuple[str, ...] = THEOREM_IDS
    n_max: int = 500
    n: int | None = None
    k_max: int = 8
    k: int | None = None
    t_max: int = 99
    ab_max: int = 6
    lemma45_p_max: int = 97
    lemma45_qs: tuple[int, ...] = (2, 3, 5)
    product_max: int = 1000
    product_k_max: int = 4
    semidirect_max: int | None = None
    semidirect_k_max: int = 6
    families: Any = None
    workers: int = 1

    def ks(self, cap: int | None = None) -> list[int]:
        if self.k is not None:
            return [self.k]
        top = self.k_max if cap is None else min(self.k_max, cap)
        return list(range(1, top + 1))

    def orders(self) -> list[int]:
        if self.n is not None:
            return [self.n]
        return list(range(2, self.n_max + 1))


def _per_order(theorem: str, n: int, ks: list[int], families) -> list[BoundReport]:
    out: list[BoundReport] = []
    if theorem == "main-bound":
        for g in noncyclic_families(n, families):
            out.extend(check_main_bound(g, k) for k in ks)
    elif theorem == "herzog":
        out.extend(check_herzog_k1(g) for g in noncyclic_families(n, families))
    elif theorem == "max-cyclic":
        for k in ks:
            out.extend(check_max_at_cyclic(n, k, families))
    elif theorem == "q-bound":
        for g in noncyclic_families(n, families):
            out.extend(check_q_bound(g, k) for k in ks)
    elif theorem == "odd-order":
        if n % 2:
            for g in noncyclic_families(n, families):
                out.extend(check_odd_order(g, k) for k in ks)
    elif theorem == "cyclic-lower":
        out.extend(check_cyclic_lower_bound(n, k) for k in ks)
    elif theorem == "min-prime-exponent":
        fact = factorize(n)
        if len(fact) == 1:
            (p, m), = fact.factors
            for k in ks:
                out.extend(check_min_prime_exponent(p, m, k))
        for k in ks:
            out.extend(check_min_nilpotent(n, k))
    else:
        raise UsageError(f"{theorem} is not an order-indexed theorem")
    return out


_ORDER_INDEXED = {"main-bound", "herzog", "max-cyclic", "q-bound", "odd-order", "cyclic-lower",
                  "min-prime-exponent"}


def _order_job(args):
    theorem, n, ks, families = args
    return _per_order(theorem, n, ks, families)


def _semidirect_job(args):
    spec, ks = args
    return semidirect_reports(spec, ks)


def _run_jobs(fn, jobs: list, workers: int) -> list[BoundReport]:
    if workers <= 1 or len(jobs) < 2:
        chunks = map(fn, jobs)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        with pool:
            chunks = list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    return [r for chunk in chunks for r in chunk]


def _product_pairs(limit: int, families) -> list[tuple[GroupSpec, GroupSpec]]:
    by_order = {n: families_of_order(n, families) for n in range(2, limit // 2 + 1)}
    pairs = []
    for na in by_order:
        for nb in range(na, limit // na + 1):
            for i, a in enumerate(by_order[na]):
                for j, b in enumerate(by_order[nb]):
                    if na == nb and j < i:
                        continue
                    pairs.append((a, b))
    return pairs


def theorem_reports(theorem: str, config: SuiteConfig) -> list[BoundReport]:
    """All reports for one theorem id under ``config``, in deterministic order."""
    families = parse_families(config.families)
    if theorem in _ORDER_INDEXED:
        ks = [1] if theorem == "herzog" else config.ks()
        jobs = [(theorem, n, ks, families) for n in config.orders()]
        return _run_jobs(_order_job, jobs, config.workers)
    if theorem == "tightness":
        return [check_tightness(t, k) for t in range(1, config.t_max + 1, 2) for k in config.ks()]
    if theorem in ("ineq-4-3", "ineq-4-4"):
        check = check_ineq_lemma_4_3 if theorem == "ineq-4-3" else check_ineq_lemma_4_4
        rng = range(1, config.ab_max + 1)
        return [check(a, b, k) for a in rng for b in rng for k in config.ks()]
    if theorem == "ineq-4-5":
        ps = [p for p in range(5, config.lemma45_p_max + 1) if is_prime(p)]
        return [check_ineq_lemma_4_5(p, q, k) for p in ps for q in config.lemma45_qs for k in config.ks()]
    if theorem == "product-ineq":
        ks = config.ks(config.product_k_max)
        return [check_product_inequality(a, b, k)
                for a, b in _product_pairs(config.product_max, families) for k in ks]
    if theorem == "semidirect-identity":
        limit = config.semidirect_max if config.semidirect_max is not None else config.n_max
        ks = config.ks(config.semidirect_k_max)
        specs = all_semidirect(limit)
        if config.n is not None:
            specs = [s for s in specs if s.order == config.n]
        return _run_jobs(_semidirect_job, [(s, ks) for s in specs], config.workers)
    raise UsageError(f"unknown theorem id {theorem!r}; valid ids: {', '.join(THEOREM_IDS)}, all")


def run_suite(config: SuiteConfig | None = None) -> list[BoundReport]:
    """Run every configured checker; reports are sorted by theorem, then n, then k."""
    config = config or SuiteConfig()
    theorems = THEOREM_IDS if "all" in config.theorems else config.theorems
    reports: list[BoundReport] = []
    for theorem in theorems:
        reports.extend(theorem_reports(theorem, config))
    return sorted(reports, key=BoundReport.sort_key)


def violations(reports: Iterable[BoundReport]) -> list[BoundReport]:
    return [r for r in reports if r.verdict is Verdict.VIOLATED]


__all__ = [
    "THEOREM_IDS", "BoundReport", "Verdict", "SuiteConfig", "UsageError", "judge",
    "main_bound_coefficients", "check_main_bound", "check_herzog_k1", "check_max_at_cyclic",
    "check_min_prime_exponent", "check_min_nilpotent", "check_q_bound", "check_odd_order",
    "check_cyclic_lower_bound", "check_tightness", "check_ineq_lemma_4_3", "check_ineq_lemma_4_4",
    "check_ineq_lemma_4_5", "check_product_inequality", "check_semidirect_identity",
    "check_quotient_bound", "semidirect_reports", "run_suite", "theorem_reports", "violations",
]
