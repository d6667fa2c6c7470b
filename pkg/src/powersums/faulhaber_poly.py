"""Faulhaber polynomials over the rationals.

A :class:`Polynomial` is a dense, immutable coefficient vector tagged with
the variable it is written in: the upper limit ``n`` or the triangular
number ``t = n(n+1)/2``. Odd-exponent power sums can be rewritten in ``t``;
the conversion divides by ``(n^2 + n)/2`` repeatedly and refuses to continue
if a remainder is not constant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from powersums.exact_core import binomial
from powersums.special_numbers import BernoulliConvention, bernoulli

__all__ = [
    "Basis",
    "Polynomial",
    "BasisConversionError",
    "faulhaber_polynomial",
    "to_triangular_basis",
    "evaluate_polynomial",
    "TRIANGULAR",
]


class Basis(enum.Enum):
    POWER_OF_N = "n"
    POWER_OF_T = "t"


class BasisConversionError(ArithmeticError):
    """Raised when a polynomial in n is not a polynomial in n(n+1)/2."""


def _trim(coeffs: Iterable[Fraction | int]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients indexed by degree, no trailing zeros."""

    coefficients: tuple[Fraction, ...]
    basis: Basis = Basis.POWER_OF_N

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[Fraction | int], basis: Basis = Basis.POWER_OF_N) -> "Polynomial":
        return cls(tuple(Fraction(c) for c in coeffs), basis)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def variable(self) -> str:
        return self.basis.value

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def _check_basis(self, other: "Polynomial") -> None:
        if self.basis is not other.basis:
            raise ValueError(f"basis mismatch: {self.basis.value} vs {other.basis.value}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_basis(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self[i] + other[i] for i in range(n)), self.basis)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients), self.basis)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(tuple(c * a for a in self.coefficients), self.basis)
        self._check_basis(other)
        if self.is_zero() or other.is_zero():
            return Polynomial((), self.basis)
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return Polynomial(tuple(out), self.basis)

    __rmul__ = __mul__

    def __divmod__(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check_basis(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dd = divisor.degree
        lead = divisor.coefficients[-1]
        if len(rem) <= dd:
            return Polynomial((), self.basis), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] / lead
            quot[i - dd] = c
            if c:
                for j, b in enumerate(divisor.coefficients):
                    rem[i - dd + j] -= c * b
        return Polynomial(tuple(quot), self.basis), Polynomial(tuple(rem[:dd]), self.basis)

    def __call__(self, value: Fraction | int) -> Fraction:
        return evaluate_polynomial(self, value)

    def to_strings(self) -> list[str]:
        """Coefficients as "num/den" strings, index = degree."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coefficients]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        var = self.variable
        parts: list[str] = []
        for deg in range(self.degree, -1, -1):
            c = self.coefficients[deg]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                mono = var if deg == 1 else f"{var}^{deg}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


# (n^2 + n)/2 written in n
TRIANGULAR = Polynomial((Fraction(0), Fraction(1, 2), Fraction(1, 2)), Basis.POWER_OF_N)


def faulhaber_polynomial(
    k: int, convention: BernoulliConvention | str = BernoulliConvention.SECOND
) -> Polynomial:
    """Polynomial in n equal to 1^k + ... + n^k.

    With the second convention the coefficient of n^(k+1-l) is
    C(k+1, l) B_l / (k+1); with the first it carries an extra (-1)^l.
    Both give the same polynomial.
    """
    if k < 0:
        raise ValueError(f"faulhaber_polynomial: k must be >= 0, got {k}")
    convention = BernoulliConvention.parse(convention)
    coeffs = [Fraction(0)] * (k + 2)
    for l in range(k + 1):
        c = binomial(k + 1, l) * bernoulli(l, convention) / (k + 1)
        if convention is BernoulliConvention.FIRST and l % 2:
            c = -c
        coeffs[k + 1 - l] = c
    return Polynomial(tuple(coeffs), Basis.POWER_OF_N)


def to_triangular_basis(poly: Polynomial) -> Polynomial:
    """Rewrite a polynomial in n as a polynomial in t = n(n+1)/2.

    Raises :class:`BasisConversionError` when some remainder of the repeated
    division by t is not a constant, which is what happens for even-exponent
    power sums.
    """
    if poly.basis is not Basis.POWER_OF_N:
        raise ValueError("to_triangular_basis expects a polynomial in n")
    out: list[Fraction] = []
    current = poly
    while not current.is_zero():
        current, rem = divmod(current, TRIANGULAR)
        if rem[1] != 0:
            raise BasisConversionError(
                f"remainder {rem} at t-degree {len(out)} is not constant; not a polynomial in n(n+1)/2"
            )
        out.append(rem[0])
    return Polynomial(tuple(out), Basis.POWER_OF_T)


def evaluate_polynomial(poly: Polynomial, value: Fraction | int) -> Fraction:
    """Horner evaluation; ``value`` is n or t according to ``poly.basis``."""
    acc = Fraction(0)
    for c in reversed(poly.coefficients):
        acc = acc * value + c
    return acc
