from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from powersums.exact_core import binomial
from powersums.power_sums import (
    Algorithm,
    arith_prog_power_sum,
    block_sum,
    block_sum_prime,
    cfz_rhs,
    shifted_block_sum,
    shifted_sum,
    sum_powers,
    sum_powers_all,
)

ALL = list(Algorithm)


def naive(n, k):
    total = 0
    for j in range(1, n + 1):
        total += j**k
    return total


@pytest.mark.parametrize("algo", ALL)
def test_small_sum(algo):
    assert sum_powers(3, 3, algo) == 36


@pytest.mark.parametrize("algo", ALL)
def test_sum_35_cubes_divisible(algo):
    assert sum_powers(35, 3, algo) % 35**2 == 0


def test_bernoulli_first_matches_naive_oracle():
    assert sum_powers(100, 7, Algorithm.BERNOULLI_FIRST) == naive(100, 7) == 1300583304167500


def test_exponent_zero():
    for algo in (Algorithm.NAIVE, Algorithm.BERNOULLI_FIRST, Algorithm.BERNOULLI_SECOND):
        assert sum_powers(17, 0, algo) == 17
    for algo in (Algorithm.STIRLING_A, Algorithm.STIRLING_B, Algorithm.HSU):
        with pytest.raises(ValueError):
            sum_powers(17, 0, algo)


def test_domain_errors():
    with pytest.raises(ValueError):
        sum_powers(0, 3)
    with pytest.raises(ValueError):
        sum_powers(3, -1)
    with pytest.raises(ValueError):
        sum_powers(3, 3, "bogus")
    assert sum_powers(3, 3, "hsu") == 36


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 400), st.integers(0, 40))
def test_all_algorithms_agree_with_naive(n, k):
    expected = naive(n, k)
    results = sum_powers_all(n, k)
    assert len(results) == (6 if k else 3)
    assert all(v == expected for v in results.values())


def test_hsu_equals_stirling_a_grid():
    for n in range(1, 60):
        for k in range(1, 20):
            assert sum_powers(n, k, Algorithm.HSU) == sum_powers(n, k, Algorithm.STIRLING_A)


def test_block_sum():
    assert block_sum(2, 3) == 794
    assert 794 % 9 == 2
    assert block_sum(1, 1) == 1
    assert block_sum(2, 7) % 49 == 0
    assert block_sum(2, 7) == 762963987380
    assert block_sum_prime(3, 5) == block_sum(3, 5) - 5**15
    with pytest.raises(ValueError):
        block_sum(0, 3)


def test_block_sum_equals_power_sum():
    for m in range(1, 6):
        for k in range(1, 12):
            assert block_sum(m, k, check=Algorithm.HSU) == naive(k, m * k)


def test_shifted_block_sum():
    assert shifted_block_sum(1, 3, 5) == block_sum(3, 5)
    assert shifted_block_sum(4, 1, 3) == 4**3 + 5**3 + 6**3 == 405
    assert 405 % 9 == 0
    direct = sum((10 + i) ** 15 for i in range(5))
    assert shifted_block_sum(10, 3, 5) == direct
    assert direct % 25 == 0
    with pytest.raises(ValueError):
        shifted_block_sum(0, 1, 3)


def test_arith_prog_power_sum():
    for k in range(1, 10):
        assert arith_prog_power_sum(1, 1, k) == block_sum(1, k)
    assert arith_prog_power_sum(2, 3, 5) == 2**5 + 5**5 + 8**5 + 11**5 + 14**5 == 734800
    assert 734800 % 25 == 0
    assert arith_prog_power_sum(1, 2, 3) == 153
    with pytest.raises(ValueError):
        arith_prog_power_sum(0, 1, 3)


def test_shifted_sum():
    for n in range(1, 10):
        for m in range(0, 6):
            assert shifted_sum(0, n, m) == sum_powers(n, m)
    assert shifted_sum(2, 5, 1) == 25
    assert shifted_sum(7, 15, 4) == sum((7 + i) ** 4 for i in range(1, 16)) == 1146727
    with pytest.raises(ValueError):
        shifted_sum(-1, 3, 2)


def test_cfz_examples():
    assert cfz_rhs(0, 3, 2) == 36
    assert cfz_rhs(1, 2, 1) == 2 + 3
    assert cfz_rhs(3, 5, 3) == sum((3 + i) ** 5 for i in range(1, 6))
    assert isinstance(cfz_rhs(3, 5, 3), Fraction)


def test_cfz_grid():
    for x in range(0, 11):
        for n in range(1, 51):
            for k in range(1, 9):
                assert cfz_rhs(x, n, k) == shifted_sum(x, n, 2 * k - 1)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(0, 8))
def test_lambda_decomposition(n, x, i):
    big = (n + x) * (n + x + 1)
    small = x * (x + 1)
    lam = n * (n + 2 * x + 1)
    rhs = sum(binomial(i, k) * lam**k * small ** (i - k) for k in range(1, i + 1))
    assert big**i - small**i == rhs
