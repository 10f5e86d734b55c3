from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import factor_naive, phi_naive
from psik.arith import (
    Cmp,
    DomainError,
    ExactRatioComparison,
    checked_sub,
    compare_cross,
    compare_ratios,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    multiplicative_order,
    power,
    primitive_root,
)


@pytest.mark.parametrize(
    "n, expected",
    [(36, ((2, 2), (3, 2))), (1, ()), (60, ((2, 2), (3, 1), (5, 1)))],
)
def test_factorize_examples(n, expected):
    assert factorize(n).factors == expected


def test_factorize_reconstructs_every_n_up_to_1e5():
    for n in range(1, 10**5 + 1):
        f = factorize(n)
        assert f.value == n, n


def test_factorize_matches_naive_trial_division():
    for n in range(1, 3000):
        assert list(factorize(n).factors) == factor_naive(n)


@pytest.mark.parametrize(
    "n",
    [
        1_000_003 * 1_000_033,  # two primes just above the trial limit
        (2**31 - 1) * (2**61 - 1),
        2**64 + 1,
        600851475143,
        3**40 * 1_000_003,
    ],
)
def test_factorize_large(n):
    f = factorize(n)
    assert f.value == n
    assert all(is_prime(p) for p in f.primes)


def test_factorize_rejects_zero():
    with pytest.raises(DomainError):
        factorize(0)


def test_is_prime_small_range_against_sieve():
    naive = [n for n in range(2, 5000) if all(n % d for d in range(2, math.isqrt(n) + 1))]
    assert [n for n in range(5000) if is_prime(n)] == naive


@pytest.mark.parametrize("n", [561, 1105, 3215031751, 3825123056546413051, 318665857834031151167461])
def test_is_prime_rejects_strong_pseudoprimes(n):
    assert not is_prime(n)


@pytest.mark.parametrize("n, phi", [(1, 1), (9, 6), (36, 12)])
def test_euler_phi_examples(n, phi):
    assert euler_phi(n) == phi == phi_naive(n)


def test_euler_phi_against_gcd_count():
    for n in range(1, 600):
        assert euler_phi(n) == phi_naive(n)


def test_euler_phi_multiplicative_on_coprime_pairs():
    for a in range(1, 1001, 7):
        for b in range(1, 1001, 11):
            if math.gcd(a, b) == 1:
                assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)


def test_phi_lower_bound_with_extreme_primes():
    # p * phi(n) >= (q - 1) * n with q, p the smallest and largest prime of n
    for n in range(2, 10**4 + 1):
        primes = factorize(n).primes
        q, p = primes[0], primes[-1]
        assert p * euler_phi(n) >= (q - 1) * n, n


def test_divisors_and_phi_sum():
    for n in range(1, 400):
        divs = divisors(n)
        assert divs == [d for d in range(1, n + 1) if n % d == 0]
        assert sum(euler_phi(d) for d in divs) == n


@pytest.mark.parametrize("base, exp, value", [(2, 10, 1024), (3, 0, 1), (5, 7, 78125), (0, 3, 0)])
def test_power_examples(base, exp, value):
    assert power(base, exp) == value


def test_power_rejects_zero_to_zero_and_negatives():
    with pytest.raises(DomainError):
        power(0, 0)
    with pytest.raises(DomainError):
        power(2, -1)
    with pytest.raises(DomainError):
        checked_sub(3, 4)
    assert checked_sub(4, 3) == 1


def test_multiplicative_order_and_primitive_roots():
    for q in (3, 5, 7, 9, 25, 27, 49, 121, 125, 343, 961):
        g = primitive_root(q)
        assert multiplicative_order(g, q) == euler_phi(q)
    assert multiplicative_order(2, 7) == 3
    with pytest.raises(DomainError):
        multiplicative_order(2, 4)


@pytest.mark.parametrize(
    "c, verdict",
    [((7, 11, 7, 11), Cmp.EQ), ((49, 77, 7, 11), Cmp.EQ), ((219, 1, 275, 1), Cmp.LT), ((3, 2, 4, 3), Cmp.GT)],
)
def test_compare_cross_examples(c, verdict):
    assert compare_cross(ExactRatioComparison(*c)) is verdict


def test_zero_denominator_rejected():
    with pytest.raises(DomainError):
        ExactRatioComparison(1, 0, 1, 1)


fractions = st.tuples(st.integers(0, 10**30), st.integers(1, 10**30))


@settings(max_examples=300)
@given(fractions, fractions)
def test_compare_cross_antisymmetric(a, b):
    ab = compare_ratios(*a, *b)
    ba = compare_ratios(*b, *a)
    flip = {Cmp.LT: Cmp.GT, Cmp.GT: Cmp.LT, Cmp.EQ: Cmp.EQ}
    assert ba is flip[ab]


@settings(max_examples=300)
@given(fractions, fractions, fractions)
def test_compare_cross_transitive(a, b, c):
    if compare_ratios(*a, *b) is not Cmp.GT and compare_ratios(*b, *c) is not Cmp.GT:
        assert compare_ratios(*a, *c) is not Cmp.GT


@settings(max_examples=200)
@given(fractions, st.integers(1, 10**6))
def test_compare_cross_scale_invariant(a, s):
    assert compare_ratios(a[0] * s, a[1] * s, *a) is Cmp.EQ
