from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from seqforge import arith
from seqforge.arith import (Primality, concat_digits, digits, factor, is_prime, power,
                            prime_divisors, repunit, small_primes)
from seqforge.exceptions import UnfactoredError


def naive_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_small_primes_agree_with_trial_division():
    primes = small_primes()
    assert primes[:10] == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert set(p for p in primes if p < 2000) == {n for n in range(2000) if naive_is_prime(n)}


@given(st.integers(min_value=0, max_value=3 * 10 ** 6))
@settings(max_examples=300, deadline=None)
def test_is_prime_matches_trial_division(n):
    assert bool(is_prime(n)) == naive_is_prime(n)


def test_known_verdicts():
    assert is_prime(2 ** 61 - 1).status is Primality.PRIME
    assert is_prime(2 ** 127 - 1).status is Primality.PROBABLE_PRIME
    assert not is_prime(3215031751)
    # strong pseudoprime to bases 2..37 is still caught
    assert not is_prime(3317044064679887385961981)
    assert is_prime(12345678910987654321)
    verdict = is_prime(10001)
    assert not verdict and verdict.witness == 73


def test_verdict_repeatable():
    n = 2 ** 89 - 1
    assert is_prime(n) == is_prime(n)


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13, 101, 1009, 999983, 1000003, 1000037]),
                min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_factor_product(primes):
    n = prod(primes)
    f = factor(n)
    assert f.value == n
    assert sorted(f.multiset()) == sorted(primes)
    assert all(is_prime(p) for p in f.primes)


def test_factor_examples():
    assert str(factor(8)) == '2^3'
    assert factor(140700001).factors == ((13, 1), (53, 2), (3853, 1))
    assert factor(10 ** 6 + 3).factors == ((10 ** 6 + 3, 1),)
    n = 1000003 * 1000033
    assert factor(n).primes == [1000003, 1000033]
    assert factor(1000003 ** 2).factors == ((1000003, 2),)


def test_factor_budget_reports_cofactor():
    p, q = 2 ** 61 - 1, 2 ** 89 - 1
    with pytest.raises(UnfactoredError) as e:
        factor(6 * p * q, budget=1)
    assert e.value.cofactor == p * q
    assert e.value.found == [2, 3]


def test_factor_rejects_small():
    with pytest.raises(ValueError):
        factor(1)


@given(st.integers(min_value=2, max_value=10 ** 6))
@settings(max_examples=200, deadline=None)
def test_prime_divisors(n):
    ps = prime_divisors(n)
    assert ps == sorted(set(factor(n).primes))
    assert prod(p ** 1 for p in ps) <= n


def test_smallest_factor_table():
    table = arith.smallest_factor_table(100)
    assert [int(table[k]) for k in (2, 9, 15, 49, 97, 100)] == [2, 3, 3, 7, 97, 2]


def test_digit_helpers():
    assert digits(10, 2) == '1010'
    assert digits(0, 10) == '0'
    with pytest.raises(ValueError):
        digits(5, 3)
    assert concat_digits([2, 2, 2]) == 222
    assert concat_digits([5, 17], 2) == 0b10110001
    with pytest.raises(ValueError):
        concat_digits([])
    with pytest.raises(ValueError):
        concat_digits([0, 1])
    assert power(0, 0) == 1
    assert power(2, 10) == 1024
    assert repunit(3) == 111
