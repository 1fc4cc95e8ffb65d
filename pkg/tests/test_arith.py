from math import gcd

import pytest
from hypothesis import given, strategies as st

import naive
from dihedral_census.arith import (
    divisors_of,
    euler_phi,
    exact_div,
    factorize,
    geom_sum_mod,
    is_prime,
    is_squarefree,
    mult_order,
    order_multiplicativity_check,
)
from dihedral_census.errors import DomainError, InvariantViolation


@pytest.mark.parametrize("n,expected", [(1, 1), (7, 6), (15, 8)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_matches_count_up_to_1000():
    for n in range(1, 1001):
        assert euler_phi(n) == naive.phi(n), n


def test_euler_phi_rejects_zero():
    with pytest.raises(DomainError):
        euler_phi(0)


@pytest.mark.parametrize("r,n,expected", [(1, 5, 1), (2, 7, 3), (2, 15, 4), (4, 1, 1), (0, 1, 1)])
def test_mult_order_examples(r, n, expected):
    assert mult_order(r, n) == expected


def test_mult_order_matches_repeated_multiplication():
    for n in range(1, 120):
        for r in range(n):
            if gcd(r, n) == 1:
                assert mult_order(r, n) == naive.order_mod(r, n)


def test_mult_order_needs_unit():
    with pytest.raises(DomainError):
        mult_order(3, 15)


@pytest.mark.parametrize("r,m,n,expected", [(7, 0, 15, 0), (4, 2, 15, 5), (2, 4, 15, 0)])
def test_geom_sum_examples(r, m, n, expected):
    assert geom_sum_mod(r, m, n) == expected


@given(st.integers(-50, 50), st.integers(0, 300), st.integers(1, 200))
def test_geom_sum_matches_accumulation(r, m, n):
    assert geom_sum_mod(r, m, n) == sum(r**k for k in range(m)) % n


def test_geom_sum_huge_exponent():
    # S_m(2) = 2^m - 1
    m = 10**30 + 7
    assert geom_sum_mod(2, m, 10**9 + 7) == (pow(2, m, 10**9 + 7) - 1) % (10**9 + 7)


def test_geom_sum_times_r_minus_one_vanishes_at_order():
    for n in range(2, 200):
        for r in range(1, n):
            if gcd(r, n) == 1:
                assert geom_sum_mod(r, mult_order(r, n), n) * (r - 1) % n == 0


def test_geom_sum_reduction_over_divisors():
    for n in range(2, 106):
        for r in range(1, n):
            if gcd(r, n) != 1:
                continue
            for d in divisors_of(n):
                od = mult_order(r, d)
                for ell in range(7):
                    for k in range(7):
                        lhs = geom_sum_mod(r, ell * k * od, n) % d
                        assert lhs == ell * geom_sum_mod(r, k * od, n) % d


@pytest.mark.parametrize("n,expected", [(1, [1]), (15, [1, 3, 5, 15]), (12, [1, 2, 3, 4, 6, 12])])
def test_divisors_examples(n, expected):
    assert list(divisors_of(n)) == expected


def test_divisors_match_filter():
    for n in range(1, 500):
        assert list(divisors_of(n)) == [d for d in range(1, n + 1) if n % d == 0]


def test_divisors_reject_zero():
    with pytest.raises(DomainError):
        divisors_of(0)


@pytest.mark.parametrize("n,expected", [(15, True), (9, False), (1, True), (12, False), (30, True)])
def test_is_squarefree(n, expected):
    assert is_squarefree(n) is expected


def test_factorize_and_primes():
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("args", [(15, 3, 5, 2), (15, 3, 5, 4), (15, 1, 15, 7), (21, 1, 21, 2)])
def test_order_multiplicativity_examples(args):
    assert order_multiplicativity_check(*args)


def test_order_multiplicativity_exhaustive():
    for n in range(1, 501):
        splits = [(d, n // d) for d in divisors_of(n) if gcd(d, n // d) == 1]
        for r in range(n):
            if gcd(r, n) != 1:
                continue
            for d, m in splits:
                assert order_multiplicativity_check(n, d, m, r)


@pytest.mark.parametrize("args", [(15, 3, 4, 2), (12, 2, 6, 1), (15, 3, 5, 3)])
def test_order_multiplicativity_preconditions(args):
    with pytest.raises(DomainError):
        order_multiplicativity_check(*args)


def test_exact_div():
    assert exact_div(2**100, 2**98) == 4
    with pytest.raises(InvariantViolation):
        exact_div(7, 2)
