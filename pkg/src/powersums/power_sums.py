"""Sums of powers of consecutive integers, several ways.

``sum_powers`` evaluates S_k(n) = 1^k + ... + n^k by plain summation and by
five closed forms (two Bernoulli conventions, two Stirling expansions and
Hsu's binomial form). Every closed form runs over exact rationals and must
land on an integer; anything else is a bug and raises ``ArithmeticError``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable

from powersums.exact_core import as_integer, binomial, falling_factorial
from powersums.special_numbers import (
    BernoulliConvention,
    bernoulli,
    bernoulli_polynomial_at,
    stirling2_row,
)

__all__ = [
    "Algorithm",
    "sum_powers",
    "sum_powers_all",
    "block_sum",
    "block_sum_prime",
    "shifted_block_sum",
    "arith_prog_power_sum",
    "shifted_sum",
    "cfz_rhs",
]


class Algorithm(enum.Enum):
    NAIVE = "naive"
    BERNOULLI_FIRST = "bernoulli1"
    BERNOULLI_SECOND = "bernoulli2"
    STIRLING_A = "stirling-a"
    STIRLING_B = "stirling-b"
    HSU = "hsu"

    @property
    def needs_positive_exponent(self) -> bool:
        return self in (Algorithm.STIRLING_A, Algorithm.STIRLING_B, Algorithm.HSU)


def _naive(n: int, k: int) -> int:
    return sum(j**k for j in range(1, n + 1))


def _bernoulli_first(n: int, k: int) -> int:
    # (1/(k+1)) sum_l (-1)^l B_l C(k+1, l) n^(k+1-l), B_1 = -1/2
    acc = Fraction(0)
    for l in range(k + 1):
        b = bernoulli(l, BernoulliConvention.FIRST)
        if b:
            term = binomial(k + 1, l) * b * n ** (k + 1 - l)
            acc += -term if l % 2 else term
    return as_integer(acc / (k + 1), "Bernoulli (first kind) power sum")


def _bernoulli_second(n: int, k: int) -> int:
    # (1/(k+1)) sum_l C(k+1, l) B_l n^(k+1-l), B_1 = +1/2
    acc = Fraction(0)
    for l in range(k + 1):
        b = bernoulli(l, BernoulliConvention.SECOND)
        if b:
            acc += binomial(k + 1, l) * b * n ** (k + 1 - l)
    return as_integer(acc / (k + 1), "Bernoulli (second kind) power sum")


def _stirling_a(n: int, k: int) -> int:
    # (n+1) sum_{i=1}^{k} {k,i} (n)_i / (i+1)
    row = stirling2_row(k)
    acc = Fraction(0)
    for i in range(1, k + 1):
        acc += Fraction(row[i] * falling_factorial(n, i), i + 1)
    return as_integer((n + 1) * acc, "Stirling (k, i) power sum")


def _stirling_b(n: int, k: int) -> int:
    # sum_{i=1}^{k+1} {k+1,i} (n)_i / i
    row = stirling2_row(k + 1)
    acc = Fraction(0)
    for i in range(1, k + 2):
        acc += Fraction(row[i] * falling_factorial(n, i), i)
    return as_integer(acc, "Stirling (k+1, i) power sum")


def _hsu(n: int, k: int) -> int:
    # sum_{j=1}^{k} j! {k,j} C(n+1, j+1); integer throughout
    row = stirling2_row(k)
    total = 0
    fact = 1
    for j in range(1, k + 1):
        fact *= j
        total += fact * row[j] * binomial(n + 1, j + 1)
    return total


_IMPL: dict[Algorithm, Callable[[int, int], int]] = {
    Algorithm.NAIVE: _naive,
    Algorithm.BERNOULLI_FIRST: _bernoulli_first,
    Algorithm.BERNOULLI_SECOND: _bernoulli_second,
    Algorithm.STIRLING_A: _stirling_a,
    Algorithm.STIRLING_B: _stirling_b,
    Algorithm.HSU: _hsu,
}


def sum_powers(n: int, k: int, algorithm: Algorithm | str = Algorithm.NAIVE) -> int:
    """S_k(n) = 1^k + 2^k + ... + n^k.

    The Stirling and Hsu forms are only defined for k >= 1.
    """
    algorithm = Algorithm(algorithm)
    if n < 1:
        raise ValueError(f"sum_powers: n must be >= 1, got {n}")
    if k < 0:
        raise ValueError(f"sum_powers: k must be >= 0, got {k}")
    if k == 0 and algorithm.needs_positive_exponent:
        raise ValueError(f"sum_powers: algorithm {algorithm.value} requires k >= 1")
    return _IMPL[algorithm](n, k)


def sum_powers_all(n: int, k: int) -> dict[Algorithm, int]:
    """Run every algorithm applicable to (n, k)."""
    return {
        algo: sum_powers(n, k, algo)
        for algo in Algorithm
        if k >= 1 or not algo.needs_positive_exponent
    }


def block_sum(m: int, k: int, check: Algorithm | None = Algorithm.BERNOULLI_FIRST) -> int:
    """S(m, k) = 1^(mk) + 2^(mk) + ... + k^(mk).

    The naive value is cross-checked against ``check`` unless it is None.
    """
    if m < 1 or k < 1:
        raise ValueError(f"block_sum: m and k must be >= 1, got ({m}, {k})")
    value = sum_powers(k, m * k, Algorithm.NAIVE)
    if check is not None and check is not Algorithm.NAIVE:
        other = sum_powers(k, m * k, check)
        if other != value:
            raise ArithmeticError(f"block_sum({m}, {k}): naive {value} != {check.value} {other}")
    return value


def block_sum_prime(m: int, k: int) -> int:
    """S'(m, k): the block sum without its last term k^(mk)."""
    if m < 1 or k < 1:
        raise ValueError(f"block_sum_prime: m and k must be >= 1, got ({m}, {k})")
    return sum_powers(k, m * k) - k ** (m * k)


def shifted_block_sum(n_start: int, m: int, k: int) -> int:
    """n^(mk) + (n+1)^(mk) + ... + (n+k-1)^(mk)."""
    if n_start < 1:
        raise ValueError(f"shifted_block_sum: start must be >= 1, got {n_start}")
    if m < 1 or k < 1:
        raise ValueError(f"shifted_block_sum: m and k must be >= 1, got ({m}, {k})")
    e = m * k
    return sum((n_start + i) ** e for i in range(k))


def arith_prog_power_sum(a: int, d: int, k: int) -> int:
    """Sum of k-th powers of the k-term progression a, a+d, ..., a+(k-1)d."""
    if a < 1 or d < 1 or k < 1:
        raise ValueError(f"arith_prog_power_sum: a, d, k must be >= 1, got ({a}, {d}, {k})")
    return sum((a + i * d) ** k for i in range(k))


def shifted_sum(x: int, n: int, m: int) -> int:
    """(x+1)^m + ... + (x+n)^m, evaluated two ways that must agree."""
    if x < 0:
        raise ValueError(f"shifted_sum: x must be >= 0, got {x}")
    if n < 1:
        raise ValueError(f"shifted_sum: n must be >= 1, got {n}")
    if m < 0:
        raise ValueError(f"shifted_sum: m must be >= 0, got {m}")
    direct = sum((x + i) ** m for i in range(1, n + 1))
    prefix = sum_powers(n + x, m) - (sum_powers(x, m) if x else 0)
    if direct != prefix:
        raise ArithmeticError(f"shifted_sum({x}, {n}, {m}): direct {direct} != prefix difference {prefix}")
    return direct


def cfz_rhs(x: int, n: int, k: int) -> Fraction:
    """Expansion of (x+1)^(2k-1) + ... + (x+n)^(2k-1) in powers of
    lam = n(n+2x+1), the doubled sum x+1 + ... + x+n:

        sum_{l=1}^{k} lam^l/(2k) sum_{j=l}^{k} C(2k,2j) C(j,l) (x+1/2)^(2j-2l) B_{2k-2j}(1/2)
    """
    if x < 0 or n < 1 or k < 1:
        raise ValueError(f"cfz_rhs: need x >= 0, n >= 1, k >= 1, got ({x}, {n}, {k})")
    lam = n * (n + 2 * x + 1)
    half_shift_sq = (Fraction(2 * x + 1, 2)) ** 2
    half = Fraction(1, 2)
    b_half = [bernoulli_polynomial_at(2 * i, half) for i in range(k + 1)]
    total = Fraction(0)
    for l in range(1, k + 1):
        inner = Fraction(0)
        for j in range(l, k + 1):
            inner += binomial(2 * k, 2 * j) * binomial(j, l) * half_shift_sq ** (j - l) * b_half[k - j]
        total += lam**l * inner
    return total / (2 * k)
