"""Memoized Bernoulli numbers, Stirling numbers of the second kind and
Lucas-polynomial coefficients.

The caches only ever grow. Extension happens under a lock and a published
entry is never modified afterwards, so readers on other threads see either
the old length or a fully computed longer table.
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction

from powersums.exact_core import binomial

__all__ = [
    "BernoulliConvention",
    "bernoulli",
    "bernoulli_table",
    "bernoulli_polynomial_at",
    "stirling2",
    "stirling2_row",
    "lucas_coeff",
]

MAX_BERNOULLI_INDEX = 10_000


class BernoulliConvention(enum.Enum):
    """Sign convention for B_1; every other index agrees."""

    FIRST = "first"    # B_1 = -1/2
    SECOND = "second"  # B_1 = +1/2

    @classmethod
    def parse(cls, value: "str | BernoulliConvention") -> "BernoulliConvention":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown Bernoulli convention {value!r}; use 'first' or 'second'") from None


_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]  # first-kind values


def _extend_bernoulli(upto: int) -> None:
    with _bern_lock:
        b = _bern
        for m in range(len(b), upto + 1):
            if m > 1 and m % 2 == 1:
                b.append(Fraction(0))
                continue
            # sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m
            s = sum((binomial(m + 1, j) * b[j] for j in range(m) if b[j]), Fraction(0))
            b.append(-s / (m + 1))


def bernoulli(index: int, convention: BernoulliConvention | str = BernoulliConvention.FIRST) -> Fraction:
    """Exact Bernoulli number B_index under the given convention."""
    if index < 0:
        raise ValueError(f"bernoulli: index must be >= 0, got {index}")
    if index > MAX_BERNOULLI_INDEX:
        raise ValueError(f"bernoulli: index {index} exceeds supported maximum {MAX_BERNOULLI_INDEX}")
    convention = BernoulliConvention.parse(convention)
    if index >= len(_bern):
        _extend_bernoulli(index)
    value = _bern[index]
    if index == 1 and convention is BernoulliConvention.SECOND:
        return -value
    return value


def bernoulli_table(upto: int, convention: BernoulliConvention | str = BernoulliConvention.FIRST) -> list[Fraction]:
    """B_0 .. B_upto as a fresh list."""
    if upto < 0:
        return []
    bernoulli(upto)
    return [bernoulli(i, convention) for i in range(upto + 1)]


def bernoulli_polynomial_at(n: int, x: Fraction | int) -> Fraction:
    """Evaluate the classical Bernoulli polynomial B_n(x).

    B_n(x) = sum_k C(n, k) B_k x^(n-k), always with first-kind B_k.
    """
    if n < 0:
        raise ValueError(f"bernoulli_polynomial_at: n must be >= 0, got {n}")
    x = Fraction(x)
    acc = Fraction(0)
    # Horner in x over the coefficient list indexed by power n-k
    for k in range(n + 1):
        acc = acc * x + binomial(n, k) * bernoulli(k)
    return acc


_stir_lock = threading.Lock()
_stir: list[tuple[int, ...]] = [(1,)]


def _extend_stirling(upto: int) -> None:
    with _stir_lock:
        rows = _stir
        for n in range(len(rows), upto + 1):
            prev = rows[-1]
            row = [0] * (n + 1)
            for k in range(1, n + 1):
                left = prev[k - 1]
                here = prev[k] if k < n else 0
                row[k] = k * here + left
            rows.append(tuple(row))


def stirling2_row(n: int) -> tuple[int, ...]:
    """Row n of the Stirling triangle, entries for k = 0..n."""
    if n < 0:
        raise ValueError(f"stirling2: n must be >= 0, got {n}")
    if n >= len(_stir):
        _extend_stirling(n)
    return _stir[n]


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    if k < 0 or n < 0:
        raise ValueError(f"stirling2: arguments must be >= 0, got ({n}, {k})")
    if k > n:
        return 0
    return stirling2_row(n)[k]


def lucas_coeff(k: int, i: int) -> int:
    """The integer k/(k-i) * C(k-i, i) for 0 <= i <= k//2."""
    if k < 1:
        raise ValueError(f"lucas_coeff: k must be >= 1, got {k}")
    if not 0 <= i <= k // 2:
        raise ValueError(f"lucas_coeff: i must lie in [0, {k // 2}], got {i}")
    return 2 * binomial(k - i, i) - binomial(k - i - 1, i)
