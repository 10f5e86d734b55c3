"""Exact natural-number helpers: factorization, Euler's function, ratio comparison.

Everything here works on Python ints; no floating point is used anywhere.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


class DomainError(ValueError):
    """An argument lies outside the domain of an arithmetic operation."""


def natural(x: int, name: str = "value") -> int:
    """Validate and return a non-negative int."""
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{name} must be an int, got {type(x).__name__}")
    if x < 0:
        raise DomainError(f"{name} must be non-negative, got {x}")
    return x


def checked_sub(a: int, b: int) -> int:
    if a < b:
        raise DomainError(f"natural subtraction {a} - {b} would be negative")
    return a - b


def power(base: int, exp: int) -> int:
    """Exact ``base ** exp`` on naturals; ``0 ** 0`` is rejected."""
    natural(base, "base")
    natural(exp, "exp")
    if base == 0 and exp == 0:
        raise DomainError("0**0 is undefined here")
    return base**exp


def geometric_sum(p: int, k: int) -> int:
    """1 + p + ... + p**k."""
    return sum(p**i for i in range(k + 1))


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, TRIAL_LIMIT + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, probabilistic above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_MR_BASES)
    if n >= _MR_DETERMINISTIC_BOUND:
        rng = random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(20)]
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a non-trivial factor of the odd composite ``n``."""
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split_large(d, out)
    _split_large(n // d, out)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p1, e1), (p2, e2), ...)`` with p1 < p2 < ..."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1 or not is_prime(p):
                raise DomainError(f"malformed factorization {self.factors}")
            prev = p

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Factor ``n >= 1``: trial division by primes below 10**6, then Pollard-Brent."""
    natural(n, "n")
    if n < 1:
        raise DomainError("factorize needs n >= 1")
    found: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        if n <= TRIAL_LIMIT**2:
            found[n] = found.get(n, 0) + 1
        else:
            _split_large(n, found)
    return Factorization(tuple(sorted(found.items())))


def euler_phi(n: int) -> int:
    result = 1
    for p, e in factorize(n):
        result *= p ** (e - 1) * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def multiplicative_order(a: int, n: int) -> int:
    """Least j >= 1 with a**j == 1 (mod n); requires gcd(a, n) == 1."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise DomainError(f"{a} is not a unit modulo {n}")
    order = euler_phi(n)
    for p, e in factorize(order):
        for _ in range(e):
            if pow(a, order // p, n) == 1:
                order //= p
            else:
                break
    return order


@lru_cache(maxsize=4096)
def primitive_root(q: int) -> int:
    """Smallest-prime-based primitive root modulo an odd prime power q."""
    (p, r), = factorize(q).factors
    if p == 2:
        raise DomainError("units modulo a power of 2 are not cyclic in general")
    phi_p = p - 1
    g = next(
        g for g in range(2, p + 1)
        if all(pow(g, phi_p // f, p) != 1 for f in factorize(phi_p).primes)
    )
    if r > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


class Cmp(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


@dataclass(frozen=True)
class ExactRatioComparison:
    """lhs_num/lhs_den against rhs_num/rhs_den."""

    lhs_num: int
    lhs_den: int
    rhs_num: int
    rhs_den: int

    def __post_init__(self):
        if self.lhs_den == 0 or self.rhs_den == 0:
            raise DomainError("zero denominator in ratio comparison")


def compare_ints(a: int, b: int) -> Cmp:
    return Cmp.LT if a < b else Cmp.GT if a > b else Cmp.EQ


def compare_cross(c: ExactRatioComparison) -> Cmp:
    """Compare two non-negative fractions by cross-multiplication."""
    return compare_ints(c.lhs_num * c.rhs_den, c.rhs_num * c.lhs_den)


def compare_ratios(a_num: int, a_den: int, b_num: int, b_den: int) -> Cmp:
    return compare_cross(ExactRatioComparison(a_num, a_den, b_num, b_den))
