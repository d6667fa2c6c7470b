from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from powersums.exact_core import (
    as_integer,
    binomial,
    falling_factorial,
    is_prime,
    mod_pow,
    prime_factors,
    prime_power,
    residue,
)


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [1] + [row[j] + row[j + 1] for j in range(len(row) - 1)] + [1]
    return row


def test_binomial_small():
    assert binomial(5, 2) == 10
    assert all(binomial(n, 0) == 1 for n in range(30))


def test_binomial_against_pascal():
    row = pascal_row(36)
    assert binomial(36, 18) == row[18] == 9075135300
    assert [binomial(36, k) for k in range(37)] == row


@pytest.mark.parametrize("n,k", [(5, -1), (5, 6), (0, 1), (3, 100)])
def test_binomial_out_of_range_is_zero(n, k):
    assert binomial(n, k) == 0


def test_binomial_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@pytest.mark.parametrize("n", range(2, 40))
def test_pascal_rule(n):
    for k in range(1, n):
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_falling_factorial():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(Fraction(7, 2), 2) == Fraction(7, 2) * Fraction(5, 2) == Fraction(35, 4)
    assert falling_factorial(Fraction(7, 2), 0) == 1
    assert falling_factorial(3, 5) == 0
    assert isinstance(falling_factorial(Fraction(1, 3), 2), Fraction)
    with pytest.raises(ValueError):
        falling_factorial(4, -1)


def test_mod_pow_examples():
    assert mod_pow(2, 10, 1000) == 24
    assert mod_pow(17, 0, 5) == 1
    assert mod_pow(17, 0, 1) == 0
    acc = 1
    for _ in range(42):
        acc = acc * 3 % 49
    assert mod_pow(3, 42, 49) == acc == 1
    assert mod_pow(-3, 3, 10) == 3  # canonical residue of -27
    with pytest.raises(ValueError):
        mod_pow(2, 3, 0)
    with pytest.raises(ValueError):
        mod_pow(2, -1, 5)


@given(st.integers(-1000, 1000), st.integers(0, 60), st.integers(1, 500))
def test_mod_pow_matches_repeated_multiplication(a, e, m):
    acc = 1 % m
    for _ in range(e):
        acc = acc * a % m
    assert mod_pow(a, e, m) == acc
    assert 0 <= mod_pow(a, e, m) < m


@given(st.integers(-10**40, 10**40), st.integers(-10**40, 10**40))
def test_integer_arithmetic_exact_and_roundtrips(a, b):
    assert (a + b) - b == a
    assert int(str(a)) == a


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(-10**4, 10**4).filter(bool))
def test_rational_normalization(p, q, c):
    x, y = Fraction(p, q), Fraction(c * p, c * q)
    assert (x.numerator, x.denominator) == (y.numerator, y.denominator)
    assert y.denominator > 0


def test_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 2) / 0


def test_residue_and_as_integer():
    assert residue(-1, 9) == 8
    assert as_integer(Fraction(10, 5)) == 2
    with pytest.raises(ArithmeticError):
        as_integer(Fraction(1, 3))


def test_primes():
    naive = [n for n in range(200) if n > 1 and all(n % d for d in range(2, n))]
    assert [n for n in range(200) if is_prime(n)] == naive
    assert list(prime_factors(360)) == [2, 3, 5]
    assert list(prime_factors(1)) == []
    assert prime_power(81) == (3, 4)
    assert prime_power(35) is None
    assert prime_power(1) is None
