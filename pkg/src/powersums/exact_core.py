"""Exact integer and rational primitives.

Python's ``int`` already is an arbitrary-precision signed integer and
:class:`fractions.Fraction` keeps every value in lowest terms with a positive
denominator, so both are used directly as the scalar types of the package.
This module adds the few combinatorial and modular helpers that the rest of
the code needs, with the domain conventions fixed in one place.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterator, TypeVar, Union

__all__ = [
    "Rational",
    "binomial",
    "falling_factorial",
    "mod_pow",
    "residue",
    "is_prime",
    "prime_factors",
    "prime_power",
    "as_integer",
]

Rational = Fraction
Number = Union[int, Fraction]
_N = TypeVar("_N", int, Fraction)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero whenever k lies outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(x: _N, i: int) -> _N:
    """Return x(x-1)...(x-i+1), the empty product 1 when i == 0.

    Integer input gives an ``int``; a ``Fraction`` gives a ``Fraction``.
    """
    if i < 0:
        raise ValueError(f"falling_factorial: i must be >= 0, got {i}")
    if not isinstance(x, _RationalABC):
        raise TypeError(f"falling_factorial: expected an exact rational, got {type(x).__name__}")
    acc = x - x + 1  # keeps the input's type
    for j in range(i):
        acc *= x - j
    return acc


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp reduced into the canonical range [0, modulus)."""
    if modulus <= 0:
        raise ValueError(f"mod_pow: modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise ValueError(f"mod_pow: exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


def residue(value: int, modulus: int) -> int:
    """Canonical representative of ``value`` modulo ``modulus``."""
    if modulus <= 0:
        raise ValueError(f"residue: modulus must be >= 1, got {modulus}")
    return value % modulus


def as_integer(value: Number, what: str = "value") -> int:
    """Convert an exact rational that must be integral into ``int``.

    A non-unit denominator means some formula produced a wrong intermediate;
    that is treated as an internal consistency failure.
    """
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for n up to about 10**12."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def prime_factors(n: int) -> Iterator[int]:
    """Yield the distinct prime divisors of n >= 1 in increasing order."""
    if n < 1:
        raise ValueError(f"prime_factors: n must be >= 1, got {n}")
    p = 2
    while p * p <= n:
        if n % p == 0:
            yield p
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        yield n


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, alpha) with n == p**alpha, or None if n is not a prime power."""
    if n < 2:
        return None
    ps = list(prime_factors(n))
    if len(ps) != 1:
        return None
    p = ps[0]
    alpha = 0
    while n % p == 0:
        n //= p
        alpha += 1
    return p, alpha
