"""Sums of k-th powers of element orders.

Several independent routes are provided (definitional from a spectrum, closed
forms for cyclic and homogeneous p-groups, two recursions for abelian
p-groups, multiplicativity over coprime factors); :func:`psi` picks the
cheapest one that applies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .arith import DomainError, factorize
from .groups import (
    Abelian,
    AbelianPPrimary,
    CayleyTable,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    OrderSpectrum,
    SemidirectCyclic,
    abelian_components,
    check_partition,
    spectrum,
    spectrum_abelian_p,
)

MAX_K = 64


class ConsistencyError(ArithmeticError):
    """A closed form produced a non-integral quotient."""


@dataclass(frozen=True)
class PsiValue:
    value: int
    k: int
    group_order: int
    route: str = "spectrum"

    def __int__(self) -> int:
        return self.value


def check_k(k: int, max_k: int = MAX_K) -> int:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"k must be an int, got {type(k).__name__}")
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    if k > max_k:
        raise DomainError(f"k={k} exceeds the configured maximum {max_k}")
    return k


def _exact_div(num: int, den: int, what: str) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"{what}: {num} is not divisible by {den}")
    return q


def psi_from_spectrum(s: OrderSpectrum, k: int, max_k: int = MAX_K) -> PsiValue:
    check_k(k, max_k)
    return PsiValue(sum(c * d**k for d, c in s), k, s.order, "spectrum")


@lru_cache(maxsize=None)
def _cyclic_pp(p: int, r: int, k: int) -> int:
    num = p ** (k * r + k + r + 1) - p ** (k * r + k + r) + p**k - 1
    return _exact_div(num, p ** (k + 1) - 1, f"psi_{k}(Z_{p}^{r})")


def psi_cyclic_prime_power(p: int, r: int, k: int) -> PsiValue:
    check_k(k)
    if r < 0:
        raise DomainError(f"r must be non-negative, got {r}")
    return PsiValue(_cyclic_pp(p, r, k), k, p**r, "closed-form")


@lru_cache(maxsize=None)
def _homogeneous(p: int, r: int, s: int, k: int) -> int:
    num = p ** (s * r + s + r * k + k) - p ** (s * r + k * r + k) + p**k - 1
    return _exact_div(num, p ** (s + k) - 1, f"psi_{k}((Z_{p}^{r})^{s})")


def psi_homogeneous(p: int, r: int, s: int, k: int) -> PsiValue:
    """psi_k of the s-fold direct power of Z_{p^r}."""
    check_k(k)
    if r < 1 or s < 1:
        raise DomainError(f"psi_homogeneous needs r, s >= 1, got r={r}, s={s}")
    return PsiValue(_homogeneous(p, r, s, k), k, p ** (r * s), "closed-form")


@lru_cache(maxsize=None)
def _recurrence(p: int, parts: tuple[int, ...], k: int) -> int:
    t, r1 = len(parts), parts[0]
    if t == 1:
        return _cyclic_pp(p, r1, k)
    if parts[-1] == r1:
        return _homogeneous(p, r1, t, k)
    # peel the smallest part
    rest = _recurrence(p, parts[1:], k)
    return _homogeneous(p, r1, t, k) + p**r1 * (rest - _homogeneous(p, r1, t - 1, k))


def psi_abelian_recurrence(p: int, parts: Iterable[int], k: int) -> PsiValue:
    check_k(k)
    parts = check_partition(parts)
    return PsiValue(_recurrence(p, parts, k), k, p ** sum(parts), "recurrence")


def _saha(p: int, parts: tuple[int, ...], k: int) -> int:
    if len(parts) == 1:
        return _cyclic_pp(p, parts[0], k)
    r, rest = parts[0], parts[1:]
    psi_h = _saha(p, rest, k)
    tail = (p - 1) * (p**k - 1)
    if r == 1:
        return p * psi_h + tail
    # counts of elements of H of each order p^j come from the spectrum, not from this recursion
    h_spec = spectrum_abelian_p(p, rest)
    total = p**r * psi_h + tail
    for i in range(2, r + 1):
        inner = p ** (k * i) - 1
        for j in range(1, i):
            inner += (p ** (k * i) - p ** (k * j)) * h_spec[p**j]
        total += (p**i - p ** (i - 1)) * inner
    return total


def psi_abelian_saha(p: int, parts: Iterable[int], k: int) -> PsiValue:
    check_k(k)
    parts = check_partition(parts)
    return PsiValue(_saha(p, parts, k), k, p ** sum(parts), "saha")


def psi_cyclic(n: int, k: int) -> int:
    """psi_k(Z_n) as a product over prime-power parts."""
    return math.prod(_cyclic_pp(p, e, k) for p, e in factorize(n))


def _psi_abelian_value(comps: dict[int, tuple[int, ...]], k: int) -> int:
    return math.prod(_recurrence(p, tuple(parts), k) for p, parts in comps.items())


def psi_multiplicative(spec: GroupSpec, k: int, max_k: int = MAX_K) -> PsiValue:
    """Product of psi_k over coprime pieces.

    Abelian specs split into their Sylow subgroups.  A direct product whose
    factors are not pairwise coprime falls back to the spectrum route and
    says so in ``route``.
    """
    check_k(k, max_k)
    comps = abelian_components(spec)
    if comps is not None:
        return PsiValue(_psi_abelian_value(comps, k), k, spec.order, "multiplicative")
    if isinstance(spec, DirectProduct):
        orders = [f.order for f in spec.factors]
        if math.prod(orders) == math.lcm(*orders):
            value = math.prod(psi(f, k, max_k=max_k).value for f in spec.factors)
            return PsiValue(value, k, spec.order, "multiplicative")
        return psi_from_spectrum(spectrum(spec), k, max_k)
    raise DomainError(f"{spec!r} has no multiplicative decomposition")


def psi(spec: GroupSpec, k: int, verify: bool = False, max_k: int = MAX_K) -> PsiValue:
    """psi_k of any supported group, via the cheapest applicable route.

    With ``verify=True`` the result is cross-checked against the spectrum route.
    """
    check_k(k, max_k)
    n = spec.order
    if isinstance(spec, (Cyclic, Abelian)):
        result = psi_multiplicative(spec, k, max_k)
    elif isinstance(spec, AbelianPPrimary):
        result = PsiValue(_recurrence(spec.p, spec.parts, k), k, n, "recurrence")
    elif isinstance(spec, Dihedral):
        result = PsiValue(psi_cyclic(spec.m, k) + spec.m * 2**k, k, n, "closed-form")
    elif isinstance(spec, Dicyclic):
        result = PsiValue(psi_cyclic(2 * spec.m, k) + 2 * spec.m * 4**k, k, n, "closed-form")
    elif isinstance(spec, SemidirectCyclic):
        result = PsiValue(psi_semidirect_identity(spec, k), k, n, "semidirect-identity")
    elif isinstance(spec, DirectProduct):
        result = psi_multiplicative(spec, k, max_k)
    elif isinstance(spec, CayleyTable):
        result = psi_from_spectrum(spectrum(spec), k, max_k)
        result = PsiValue(result.value, k, n, "bruteforce")
    else:
        raise TypeError(f"unknown group spec {spec!r}")
    if verify:
        check = psi_from_spectrum(spectrum(spec), k, max_k).value
        if check != result.value:
            raise ConsistencyError(
                f"route {result.route} gave {result.value}, spectrum gave {check} for {spec!r}"
            )
    return result


def psi_semidirect_identity(spec: SemidirectCyclic, k: int) -> int:
    """psi_k(P) psi_k(Z) + |P| (psi_k(F) - psi_k(Z)) with Z the kernel of the action."""
    psi_p = _cyclic_pp(spec.p, spec.r, k)
    psi_z = psi_cyclic(spec.kernel_order, k)
    psi_f = psi_cyclic(spec.m, k)
    return psi_p * psi_z + spec.q * (psi_f - psi_z)
