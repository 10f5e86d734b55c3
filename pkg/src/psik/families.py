"""Built-in group instances of a given order."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .arith import divisors, euler_phi, factorize, primitive_root
from .groups import (
    Abelian,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    SemidirectCyclic,
    partitions,
)

ALL_FAMILIES = frozenset({"cyclic", "abelian", "dihedral", "dicyclic", "semidirect"})


def parse_families(names) -> frozenset[str]:
    if names is None:
        return ALL_FAMILIES
    if isinstance(names, str):
        names = [s.strip() for s in names.split(",") if s.strip()]
    chosen = frozenset(names)
    unknown = chosen - ALL_FAMILIES
    if unknown:
        raise ValueError(f"unknown families {sorted(unknown)}; choose from {sorted(ALL_FAMILIES)}")
    return chosen


@lru_cache(maxsize=None)
def action_representative(q: int, d: int) -> int:
    """Smallest unit mod the odd prime power q of multiplicative order exactly d.

    Units of order d form the generators of the unique order-d subgroup, so this
    picks one canonical action per subgroup.
    """
    phi = euler_phi(q)
    if phi % d:
        raise ValueError(f"no unit of order {d} modulo {q}")
    h = pow(primitive_root(q), phi // d, q)
    return min(pow(h, j, q) for j in range(1, d + 1) if math.gcd(j, d) == 1)


def abelian_types(n: int) -> list[Abelian]:
    """Every abelian group of order n, including the cyclic one, as ``Abelian``."""
    fact = factorize(n)
    if not fact.factors:
        return []
    choices = [[(p, parts) for parts in partitions(e)] for p, e in fact]
    return [Abelian(dict(combo)) for combo in itertools.product(*choices)]


def semidirect_instances(n: int, include_trivial: bool = False) -> list[SemidirectCyclic]:
    """Z_{p^r} x| Z_m with p^r exactly dividing n, one per action subgroup."""
    out = []
    for p, r in factorize(n):
        q, m = p**r, n // p**r
        if m < 2:
            continue
        if include_trivial:
            out.append(SemidirectCyclic(p, r, m, 1))
        if p == 2:
            continue  # units mod 2^r have 2-power order; m is odd
        for d in divisors(math.gcd(m, p - 1)):
            if d > 1:
                out.append(SemidirectCyclic(p, r, m, action_representative(q, d)))
    return out


def all_semidirect(max_order: int) -> list[SemidirectCyclic]:
    """Every valid (p, r, m, a) with p^r m <= max_order, every action exponent a."""
    out = []
    for q in range(2, max_order // 2 + 1):
        fact = factorize(q)
        if len(fact) != 1:
            continue
        (p, r), = fact.factors
        for m in range(2, max_order // q + 1):
            if m % p == 0:
                continue
            for a in range(1, q):
                if math.gcd(a, q) == 1 and pow(a, m, q) == 1:
                    out.append(SemidirectCyclic(p, r, m, a))
    return out


def families_of_order(n: int, families=None) -> list[GroupSpec]:
    """Built-in instances of order n: Cyclic(n) first, then non-cyclic ones.

    Abelian types with one part per prime are the cyclic group and are not
    repeated; ``Dihedral(2)`` is Z_2 x Z_2 and ``Dihedral(1)`` is Z_2, so the
    dihedral family starts at m = 3.  Semidirect products use non-trivial actions
    and skip the inversion actions that rebuild a dihedral or dicyclic group.
    """
    families = parse_families(families)
    out: list[GroupSpec] = []
    if "cyclic" in families:
        out.append(Cyclic(n))
    if "abelian" in families:
        out.extend(a for a in abelian_types(n) if any(len(pt) > 1 for _, pt in a.components))
    if "dihedral" in families and n % 2 == 0 and n // 2 >= 3:
        out.append(Dihedral(n // 2))
    if "dicyclic" in families and n % 4 == 0 and n // 4 >= 2:
        out.append(Dicyclic(n // 4))
    if "semidirect" in families:
        out.extend(s for s in semidirect_instances(n) if not _dihedral_or_dicyclic_alias(s, families))
    return out


def _dihedral_or_dicyclic_alias(spec: SemidirectCyclic, families) -> bool:
    """Inversion by Z_2 or Z_4 gives D_q or Dic_q, already listed by their own families."""
    if spec.a != spec.q - 1:
        return False
    return (spec.m == 2 and "dihedral" in families) or (spec.m == 4 and "dicyclic" in families)


def noncyclic_families(n: int, families=None) -> list[GroupSpec]:
    return [g for g in families_of_order(n, families) if not isinstance(g, Cyclic)]


def sylow_candidates(p: int, e: int) -> list[GroupSpec]:
    """Supported groups of order p^e: abelian types plus (p = 2) dihedral and dicyclic 2-groups."""
    out: list[GroupSpec] = [Abelian({p: parts}) for parts in partitions(e)]
    if p == 2 and e >= 3:
        out.append(Dihedral(2 ** (e - 1)))
        out.append(Dicyclic(2 ** (e - 2)))
    return out


def nilpotent_candidates(n: int) -> list[GroupSpec]:
    """Direct products of one supported Sylow candidate per prime of n."""
    if n == 1:
        return [Cyclic(1)]
    per_prime = [sylow_candidates(p, e) for p, e in factorize(n)]
    out = []
    for combo in itertools.product(*per_prime):
        out.append(combo[0] if len(combo) == 1 else DirectProduct(combo))
    return out
