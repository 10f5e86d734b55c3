"""Structural group descriptions and their order spectra.

A spectrum maps each element order ``d`` to the number of elements of that
order.  Closed forms are provided for every built-in family; direct products
are handled by lcm-convolution of factor spectra.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

from .arith import divisors, euler_phi, factorize, is_prime, multiplicative_order


class GroupSpecError(ValueError):
    """A group description violates one of its structural invariants."""


def check_partition(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    if not parts:
        raise GroupSpecError("partition must be nonempty")
    if any(not isinstance(r, int) or r < 1 for r in parts):
        raise GroupSpecError(f"partition parts must be positive ints: {parts}")
    if list(parts) != sorted(parts):
        raise GroupSpecError(f"partition must be ascending: {parts}")
    return parts


def partitions(m: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``m`` as ascending tuples."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions(m - first, first):
            yield tuple(sorted((first,) + rest))


def _check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise GroupSpecError(f"{p} is not a prime")
    return p


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GroupSpecError(f"Cyclic needs n >= 1, got {self.n}")

    @property
    def order(self) -> int:
        return self.n


@dataclass(frozen=True)
class AbelianPPrimary:
    """Z_{p^r1} x ... x Z_{p^rt} with r1 <= ... <= rt."""

    p: int
    parts: tuple[int, ...]

    def __post_init__(self):
        _check_prime(self.p)
        object.__setattr__(self, "parts", check_partition(self.parts))

    @property
    def order(self) -> int:
        return self.p ** sum(self.parts)


@dataclass(frozen=True)
class Abelian:
    """Abelian group given by one partition per prime.

    ``components`` may be passed as a dict ``{p: parts}``; it is stored as a
    tuple of ``(p, parts)`` sorted by prime.
    """

    components: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        comps = self.components
        if isinstance(comps, Mapping):
            comps = comps.items()
        normed = tuple(sorted((_check_prime(p), check_partition(parts)) for p, parts in comps))
        if not normed:
            raise GroupSpecError("Abelian needs at least one prime component")
        if len({p for p, _ in normed}) != len(normed):
            raise GroupSpecError("Abelian lists a prime twice")
        object.__setattr__(self, "components", normed)

    @property
    def order(self) -> int:
        return math.prod(p ** sum(parts) for p, parts in self.components)

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.components)


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of order 2m (so ``Dihedral(18)`` has 36 elements)."""

    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise GroupSpecError(f"Dihedral needs m >= 1, got {self.m}")

    @property
    def order(self) -> int:
        return 2 * self.m


@dataclass(frozen=True)
class Dicyclic:
    """Dicyclic group of order 4m; m = 2 is the quaternion group."""

    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise GroupSpecError(f"Dicyclic needs m >= 2, got {self.m}")

    @property
    def order(self) -> int:
        return 4 * self.m


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise GroupSpecError("DirectProduct needs at least one factor")
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)


@dataclass(frozen=True)
class SemidirectCyclic:
    """Z_{p^r} x| Z_m where the generator of Z_m acts by u -> a*u."""

    p: int
    r: int
    m: int
    a: int

    def __post_init__(self):
        _check_prime(self.p)
        if self.r < 1:
            raise GroupSpecError(f"SemidirectCyclic needs r >= 1, got {self.r}")
        if self.m < 2:
            raise GroupSpecError(f"SemidirectCyclic needs m >= 2, got {self.m}")
        if math.gcd(self.p, self.m) != 1:
            raise GroupSpecError(f"gcd(p, m) = gcd({self.p}, {self.m}) != 1")
        q = self.q
        if not 1 <= self.a < q or math.gcd(self.a, q) != 1:
            raise GroupSpecError(f"action exponent a={self.a} is not a unit in [1, {q})")
        if pow(self.a, self.m, q) != 1:
            raise GroupSpecError(
                f"invalid action: a^m = {self.a}^{self.m} is not 1 mod {q}"
            )

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def order(self) -> int:
        return self.q * self.m

    @property
    def action_order(self) -> int:
        return multiplicative_order(self.a, self.q)

    @property
    def kernel_order(self) -> int:
        """|C_F(P)|: the x in Z_m acting trivially form a subgroup of this order."""
        return self.m // self.action_order


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """Explicit multiplication table on indices 0..n-1."""

    n: int
    table: np.ndarray
    identity: int = 0
    source: str | None = field(default=None, compare=False)

    def __post_init__(self):
        table = np.asarray(self.table, dtype=np.int64)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @property
    def order(self) -> int:
        return self.n

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return (
            self.n == other.n
            and self.identity == other.identity
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.n, self.identity, self.table.tobytes()))


GroupSpec = Union[
    Cyclic, AbelianPPrimary, Abelian, Dihedral, Dicyclic, DirectProduct, SemidirectCyclic, CayleyTable
]


@dataclass(frozen=True)
class OrderSpectrum:
    """Element counts keyed by element order, stored as sorted ``(d, count)`` pairs."""

    items: tuple[tuple[int, int], ...]
    order: int
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.items))
        if sum(c for _, c in self.items) != self.order:
            raise GroupSpecError(f"spectrum counts do not sum to {self.order}")
        if self._lookup.get(1) != 1:
            raise GroupSpecError("spectrum must contain exactly one element of order 1")
        for d, c in self.items:
            if c <= 0 or self.order % d:
                raise GroupSpecError(f"bad spectrum entry {d}: {c} for order {self.order}")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], order: int | None = None) -> OrderSpectrum:
        items = tuple(sorted((d, c) for d, c in counts.items() if c))
        if order is None:
            order = sum(c for _, c in items)
        return cls(items, order)

    def __getitem__(self, d: int) -> int:
        return self._lookup.get(d, 0)

    def __iter__(self):
        return iter(self.items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def exponent(self) -> int:
        return math.lcm(*(d for d, _ in self.items))


def spectrum_cyclic(n: int) -> OrderSpectrum:
    if n < 1:
        raise GroupSpecError("spectrum_cyclic needs n >= 1")
    return OrderSpectrum.from_counts({d: euler_phi(d) for d in divisors(n)}, n)


def spectrum_abelian_p(p: int, parts: Iterable[int]) -> OrderSpectrum:
    """Spectrum of Z_{p^r1} x ... x Z_{p^rt}.

    The solutions of x^(p^j) = e number p^(sum_i min(r_i, j)); consecutive
    differences give the count of each order p^j.
    """
    _check_prime(p)
    parts = check_partition(parts)
    killed = [p ** sum(min(r, j) for r in parts) for j in range(parts[-1] + 1)]
    counts = {1: 1}
    for j in range(1, parts[-1] + 1):
        counts[p**j] = killed[j] - killed[j - 1]
    return OrderSpectrum.from_counts(counts, p ** sum(parts))


def spectrum_product(s1: OrderSpectrum, s2: OrderSpectrum) -> OrderSpectrum:
    """Spectrum of a direct product: a pair has order lcm of the component orders."""
    acc: dict[int, int] = defaultdict(int)
    for d1, c1 in s1:
        for d2, c2 in s2:
            acc[math.lcm(d1, d2)] += c1 * c2
    return OrderSpectrum.from_counts(acc, s1.order * s2.order)


def spectrum_dihedral(m: int) -> OrderSpectrum:
    if m < 1:
        raise GroupSpecError("spectrum_dihedral needs m >= 1")
    counts = spectrum_cyclic(m).as_dict()
    counts[2] = counts.get(2, 0) + m
    return OrderSpectrum.from_counts(counts, 2 * m)


def spectrum_dicyclic(m: int) -> OrderSpectrum:
    if m < 2:
        raise GroupSpecError("spectrum_dicyclic needs m >= 2")
    counts = spectrum_cyclic(2 * m).as_dict()
    counts[4] = counts.get(4, 0) + 2 * m
    return OrderSpectrum.from_counts(counts, 4 * m)


def spectrum_semidirect(spec: SemidirectCyclic) -> OrderSpectrum:
    """Elements ux with x in the kernel Z have order o(u)o(x); the rest have order o(x)."""
    kernel = spectrum_cyclic(spec.kernel_order)
    counts = spectrum_product(spectrum_cyclic(spec.q), kernel).as_dict()
    for d, c in spectrum_cyclic(spec.m):
        outside = c - kernel[d]
        if outside:
            counts[d] = counts.get(d, 0) + spec.q * outside
    return OrderSpectrum.from_counts(counts, spec.order)


def abelian_components(spec: GroupSpec) -> dict[int, tuple[int, ...]] | None:
    """Per-prime partitions when ``spec`` is abelian by construction, else None."""
    if isinstance(spec, Cyclic):
        return {p: (e,) for p, e in factorize(spec.n)}
    if isinstance(spec, AbelianPPrimary):
        return {spec.p: spec.parts}
    if isinstance(spec, Abelian):
        return spec.as_dict()
    if isinstance(spec, Dihedral) and spec.m <= 2:
        return {2: (1,) * spec.m}
    if isinstance(spec, SemidirectCyclic) and spec.a == 1:
        return abelian_components(Cyclic(spec.order))
    if isinstance(spec, DirectProduct):
        merged: dict[int, list[int]] = defaultdict(list)
        for f in spec.factors:
            comps = abelian_components(f)
            if comps is None:
                return None
            for p, parts in comps.items():
                merged[p].extend(parts)
        return {p: tuple(sorted(parts)) for p, parts in merged.items()}
    return None


def as_abelian(spec: GroupSpec) -> Abelian | Cyclic | None:
    comps = abelian_components(spec)
    if comps is None:
        return None
    if not comps:
        return Cyclic(1)
    return Abelian(comps)


def is_cyclic(spec: GroupSpec) -> bool:
    """Structural cyclicity test; Cayley tables are decided by their spectrum."""
    comps = abelian_components(spec)
    if comps is not None:
        return all(len(parts) == 1 for parts in comps.values())
    if isinstance(spec, (Dihedral, Dicyclic, SemidirectCyclic)):
        return False
    if isinstance(spec, DirectProduct):
        if not all(is_cyclic(f) for f in spec.factors):
            return False
        orders = [f.order for f in spec.factors]
        return math.prod(orders) == math.lcm(*orders)
    if isinstance(spec, CayleyTable):
        from .cayley import spectrum_bruteforce

        return spectrum_bruteforce(spec)[spec.n] > 0
    raise TypeError(f"unknown group spec {spec!r}")


def spectrum(spec: GroupSpec) -> OrderSpectrum:
    """Order spectrum of any supported group description."""
    if isinstance(spec, Cyclic):
        return spectrum_cyclic(spec.n)
    if isinstance(spec, AbelianPPrimary):
        return spectrum_abelian_p(spec.p, spec.parts)
    if isinstance(spec, Abelian):
        result = spectrum_cyclic(1)
        for p, parts in spec.components:
            result = spectrum_product(result, spectrum_abelian_p(p, parts))
        return result
    if isinstance(spec, Dihedral):
        return spectrum_dihedral(spec.m)
    if isinstance(spec, Dicyclic):
        return spectrum_dicyclic(spec.m)
    if isinstance(spec, SemidirectCyclic):
        return spectrum_semidirect(spec)
    if isinstance(spec, DirectProduct):
        result = spectrum_cyclic(1)
        for f in spec.factors:
            result = spectrum_product(result, spectrum(f))
        return result
    if isinstance(spec, CayleyTable):
        from .cayley import spectrum_bruteforce

        return spectrum_bruteforce(spec)
    raise TypeError(f"unknown group spec {spec!r}")
