"""Slow reference implementations used only by the tests.

Nothing here imports psik: group elements are plain tuples, products follow the
textbook presentations, and element orders come from repeated multiplication.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter


def _order_of(g, mul, e) -> int:
    x, j = g, 1
    while x != e:
        x = mul(x, g)
        j += 1
    return j


def _spectrum(elements, mul, e) -> dict[int, int]:
    return dict(Counter(_order_of(g, mul, e) for g in elements))


def abelian_spectrum(moduli) -> dict[int, int]:
    moduli = tuple(moduli)
    elems = list(itertools.product(*(range(m) for m in moduli)))

    def mul(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, moduli))

    return _spectrum(elems, mul, (0,) * len(moduli))


def dihedral_spectrum(m: int) -> dict[int, int]:
    # (i, s) stands for r^i s^s with s r s = r^-1
    elems = [(i, s) for s in (0, 1) for i in range(m)]

    def mul(a, b):
        i1, s1 = a
        i2, s2 = b
        return ((i1 + (-i2 if s1 else i2)) % m, s1 ^ s2)

    return _spectrum(elems, mul, (0, 0))


def dicyclic_spectrum(m: int) -> dict[int, int]:
    # (i, j) stands for a^i x^j with a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1
    n = 2 * m
    elems = [(i, j) for j in (0, 1) for i in range(n)]

    def mul(a, b):
        i1, j1 = a
        i2, j2 = b
        if not j1:
            return ((i1 + i2) % n, j2)
        if j2:
            return ((i1 - i2 + m) % n, 0)
        return ((i1 - i2) % n, 1)

    return _spectrum(elems, mul, (0, 0))


def semidirect_spectrum(q: int, m: int, a: int) -> dict[int, int]:
    elems = [(u, x) for u in range(q) for x in range(m)]

    def mul(g, h):
        return ((g[0] + pow(a, g[1], q) * h[0]) % q, (g[1] + h[1]) % m)

    return _spectrum(elems, mul, (0, 0))


def psi_of(spec: dict[int, int], k: int) -> int:
    return sum(c * d**k for d, c in spec.items())


def psi_cyclic_naive(n: int, k: int) -> int:
    return sum((n // math.gcd(i, n)) ** k for i in range(n))


def phi_naive(n: int) -> int:
    return sum(1 for i in range(1, n + 1) if math.gcd(i, n) == 1)


def factor_naive(n: int) -> list[tuple[int, int]]:
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out
