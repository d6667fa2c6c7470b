import threading
from collections import Counter
from fractions import Fraction

import pytest

from powersums.exact_core import binomial, falling_factorial, is_prime
from powersums.special_numbers import (
    BernoulliConvention,
    bernoulli,
    bernoulli_polynomial_at,
    bernoulli_table,
    lucas_coeff,
    stirling2,
    stirling2_row,
)

FIRST, SECOND = BernoulliConvention.FIRST, BernoulliConvention.SECOND


def akiyama_tanigawa(n):
    """Second-kind Bernoulli numbers by a different algorithm than the library's."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


def set_partition_counts(n):
    def parts(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for p in parts(rest):
            yield [[first]] + p
            for i in range(len(p)):
                yield p[:i] + [[first] + p[i]] + p[i + 1:]

    return Counter(len(p) for p in parts(list(range(n))))


def test_bernoulli_examples():
    assert bernoulli(1, FIRST) == Fraction(-1, 2)
    assert bernoulli(1, SECOND) == Fraction(1, 2)
    assert bernoulli(2, FIRST) == bernoulli(2, SECOND) == Fraction(1, 6)
    assert bernoulli(5) == 0
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(1, "second") == Fraction(1, 2)


def test_bernoulli_matches_akiyama_tanigawa():
    ref = akiyama_tanigawa(60)
    assert bernoulli_table(60, SECOND) == ref


@pytest.mark.parametrize("m", range(2, 61))
def test_bernoulli_defining_recurrence(m):
    assert sum(binomial(m + 1, j) * bernoulli(j, FIRST) for j in range(m + 1)) == 0


def test_bernoulli_conventions_differ_only_at_one():
    for i in range(80):
        diff = bernoulli(i, SECOND) - bernoulli(i, FIRST)
        assert diff == (1 if i == 1 else 0)


def test_bernoulli_table_invariants():
    t = bernoulli_table(40)
    assert t[0] == 1
    assert all(t[i] == 0 for i in range(3, 41, 2))
    with pytest.raises(ValueError):
        bernoulli(-1)
    with pytest.raises(ValueError):
        BernoulliConvention.parse("third")


def test_bernoulli_polynomial_at_half():
    half = Fraction(1, 2)
    assert bernoulli_polynomial_at(0, half) == 1
    assert bernoulli_polynomial_at(1, half) == 0
    assert bernoulli_polynomial_at(2, half) == Fraction(-1, 12)
    # B_n(1/2) = (2^(1-n) - 1) B_n
    for n in range(0, 30):
        assert bernoulli_polynomial_at(n, half) == (Fraction(2) ** (1 - n) - 1) * bernoulli(n)


@pytest.mark.parametrize("n", range(0, 15))
def test_bernoulli_polynomial_difference(n):
    # B_n(x+1) - B_n(x) = n x^(n-1)
    for x in (Fraction(0), Fraction(1, 3), Fraction(5), Fraction(-7, 2)):
        lhs = bernoulli_polynomial_at(n, x + 1) - bernoulli_polynomial_at(n, x)
        assert lhs == (n * x ** (n - 1) if n else 0)


def test_stirling_examples():
    assert stirling2(4, 2) == 7
    assert all(stirling2(n, 1) == 1 for n in range(1, 30))
    assert stirling2(3, 5) == 0
    assert stirling2(7, 3) % 7 == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8])
def test_stirling_against_enumeration(n):
    counts = set_partition_counts(n)
    assert [stirling2(n, k) for k in range(1, n + 1)] == [counts[k] for k in range(1, n + 1)]


def test_stirling_triangle_invariants():
    for n in range(0, 60):
        row = stirling2_row(n)
        assert row[n] == 1
        if n >= 1:
            assert row[0] == 0 and row[1] == 1
            for k in range(1, n):
                assert row[k] == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_stirling_expansion_of_powers():
    for x in range(0, 13):
        for n in range(0, 13):
            assert sum(stirling2(n, k) * falling_factorial(x, k) for k in range(n + 1)) == x**n
    for x in range(1, 13):
        for n in range(0, 13):
            total = sum(stirling2(n + 1, k) * falling_factorial(x - 1, k - 1) for k in range(1, n + 2))
            assert total == x**n


def test_odd_prime_divides_stirling_row():
    for p in [q for q in range(3, 51) if is_prime(q)]:
        assert all(stirling2(p, i) % p == 0 for i in range(2, p))


def test_lucas_coeff():
    assert lucas_coeff(7, 3) == 7
    assert lucas_coeff(5, 2) == 5
    for k in range(1, 60):
        assert lucas_coeff(k, 0) == 1
        for i in range(k // 2 + 1):
            assert lucas_coeff(k, i) * (k - i) == k * binomial(k - i, i)
    with pytest.raises(ValueError):
        lucas_coeff(7, 4)
    with pytest.raises(ValueError):
        lucas_coeff(0, 0)


def test_concurrent_first_queries_agree():
    # cold indices beyond anything other tests request
    results = []

    def work():
        results.append((bernoulli(400), stirling2(300, 17)))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1
