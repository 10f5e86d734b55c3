"""Scans over built-in families: order reversals, extremal values, worst ratios."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Any

from .arith import Cmp, compare_ratios
from .families import families_of_order, noncyclic_families
from .groups import GroupSpec, abelian_components
from .psi import check_k, psi, psi_cyclic
from .syntax import render
from .verify import BoundReport, main_bound_coefficients


class BoundViolation(AssertionError):
    def __init__(self, report: BoundReport):
        self.report = report
        super().__init__(f"bound violated: {report.to_dict()}")


@dataclass(frozen=True)
class ReversalWitness:
    """g1 has the smaller psi at k_low but the larger psi at k_high.

    ``k_high`` is the largest k <= k_max showing the reversal; ``k_first`` the smallest.
    """

    g1: GroupSpec
    g2: GroupSpec
    k_low: int
    k_high: int
    k_first: int
    psi_low_g1: int
    psi_low_g2: int
    psi_high_g1: int
    psi_high_g2: int

    def __post_init__(self):
        if self.g1.order != self.g2.order:
            raise ValueError("reversal witnesses need groups of equal order")
        if not (self.psi_low_g1 < self.psi_low_g2 and self.psi_high_g1 > self.psi_high_g2):
            raise ValueError("not a strict reversal")

    def to_dict(self) -> dict[str, Any]:
        return {
            "g1": render(self.g1), "g2": render(self.g2), "n": self.g1.order,
            "k_low": self.k_low, "k_high": self.k_high, "k_first": self.k_first,
            "psi_low_g1": str(self.psi_low_g1), "psi_low_g2": str(self.psi_low_g2),
            "psi_high_g1": str(self.psi_high_g1), "psi_high_g2": str(self.psi_high_g2),
        }


def find_reversals(n: int, k_max: int, families=None) -> list[ReversalWitness]:
    """Unordered family pairs of order n whose psi_1 and psi_k comparisons disagree.

    Each pair is oriented so that g1 has the smaller psi_1; pairs tied at k = 1
    are skipped.
    """
    if n < 2:
        raise ValueError("find_reversals needs n >= 2")
    check_k(k_max)
    groups = families_of_order(n, families)
    table = {i: [psi(g, k).value for k in range(1, k_max + 1)] for i, g in enumerate(groups)}
    out = []
    for i in range(len(groups)):
        for j in range(i + 1, len(groups)):
            a, b = table[i], table[j]
            if a[0] == b[0]:
                continue
            lo, hi = (i, j) if a[0] < b[0] else (j, i)
            vlo, vhi = table[lo], table[hi]
            flipped = [k for k in range(2, k_max + 1) if vlo[k - 1] > vhi[k - 1]]
            if flipped:
                kh = flipped[-1]
                out.append(ReversalWitness(
                    groups[lo], groups[hi], 1, kh, flipped[0],
                    vlo[0], vhi[0], vlo[kh - 1], vhi[kh - 1],
                ))
    return out


@dataclass(frozen=True)
class Extremal:
    n: int
    k: int
    argmax: GroupSpec
    argmin: GroupSpec  # among abelian candidates
    values: tuple[tuple[GroupSpec, int], ...]
    strict_max: bool
    strict_min: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n, "k": self.k,
            "argmax": render(self.argmax), "argmin_abelian": render(self.argmin),
            "strict_max": self.strict_max, "strict_min": self.strict_min,
            "values": {render(g): str(v) for g, v in self.values},
        }


def extremal_over_order(n: int, k: int, families=None) -> Extremal:
    if n < 2:
        raise ValueError("extremal_over_order needs n >= 2")
    check_k(k)
    groups = families_of_order(n, families)
    if not groups:
        raise ValueError(f"no candidate groups of order {n}")
    values = tuple((g, psi(g, k).value) for g in groups)
    top = max(v for _, v in values)
    winners = [g for g, v in values if v == top]
    abelian = [(g, v) for g, v in values if abelian_components(g) is not None]
    if abelian:
        low = min(v for _, v in abelian)
        losers = [g for g, v in abelian if v == low]
    else:
        losers = [min(values, key=lambda gv: gv[1])[0]]
    return Extremal(n, k, winners[0], losers[0], values, len(winners) == 1, len(losers) == 1)


@dataclass(frozen=True)
class RatioRecord:
    spec: GroupSpec
    k: int
    psi_group: int
    psi_cyclic: int
    bound_num: int
    bound_den: int

    @property
    def n(self) -> int:
        return self.spec.order

    @property
    def at_bound(self) -> bool:
        return compare_ratios(self.psi_group, self.psi_cyclic, self.bound_num, self.bound_den) is Cmp.EQ

    def to_dict(self) -> dict[str, Any]:
        return {
            "group": render(self.spec), "n": self.n, "k": self.k,
            "psi_k": str(self.psi_group), "psi_k_cyclic": str(self.psi_cyclic),
            "bound": f"{self.bound_num}/{self.bound_den}", "at_bound": self.at_bound,
        }


def _ratio_order(a: RatioRecord, b: RatioRecord) -> int:
    c = compare_ratios(a.psi_group, a.psi_cyclic, b.psi_group, b.psi_cyclic)
    if c is not Cmp.EQ:
        return -1 if c is Cmp.GT else 1
    ka, kb = (a.n, render(a.spec)), (b.n, render(b.spec))
    return -1 if ka < kb else 1 if ka > kb else 0


def ratio_records(n: int, k: int, families=None) -> list[RatioRecord]:
    num, den = main_bound_coefficients(k)
    cyc = psi_cyclic(n, k)
    out = []
    for g in noncyclic_families(n, families):
        rec = RatioRecord(g, k, psi(g, k).value, cyc, num, den)
        if compare_ratios(rec.psi_group, cyc, num, den) is Cmp.GT:
            raise BoundViolation(BoundReport(
                "main-bound", {"group": render(g), "n": n, "k": k}, den * rec.psi_group, num * cyc, "<="
            ))
        out.append(rec)
    return out


def worst_ratio_scan(n_max: int, k: int, families=None, top: int | None = 10) -> list[RatioRecord]:
    """Non-cyclic instances with the largest psi_k(G)/psi_k(Z_n), best first.

    Raises :class:`BoundViolation` if any ratio exceeds the non-cyclic bound.
    """
    if n_max < 4:
        raise ValueError("worst_ratio_scan needs n_max >= 4")
    check_k(k)
    records = [r for n in range(2, n_max + 1) for r in ratio_records(n, k, families)]
    records.sort(key=functools.cmp_to_key(_ratio_order))
    return records if top is None else records[:top]


__all__ = [
    "BoundViolation", "ReversalWitness", "Extremal", "RatioRecord",
    "find_reversals", "extremal_over_order", "worst_ratio_scan", "ratio_records",
]
