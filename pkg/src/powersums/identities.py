"""Girard-Waring identities for two-term power sums.

Each ``*_rhs`` function evaluates the symmetric-function side of an
identity (powers of ``x + y`` and ``xy``) with integer coefficients, so the
caller can compare it with the directly computed left-hand side. The
``*_report`` helpers do that comparison and package it as a report.
"""

from __future__ import annotations

from fractions import Fraction

from powersums.exact_core import binomial, is_prime
from powersums.report import DivisibilityReport
from powersums.special_numbers import lucas_coeff

__all__ = [
    "gw_power_sum_rhs",
    "gw_binet_rhs",
    "gw_general_binet_lhs_rhs",
    "gw_zero_sum_rhs",
    "check_prop_pxy",
    "gw_power_report",
    "gw_binet_report",
    "gw_zero_report",
    "gw_general_report",
]


def gw_power_sum_rhs(x: int, y: int, n: int) -> int:
    """sum_{k=0}^{n//2} (-1)^k n/(n-k) C(n-k,k) (xy)^k (x+y)^(n-2k), which is x^n + y^n."""
    if n < 1:
        raise ValueError(f"gw_power_sum_rhs: n must be >= 1, got {n}")
    s, p = x + y, x * y
    total = 0
    for k in range(n // 2 + 1):
        term = lucas_coeff(n, k) * p**k * s ** (n - 2 * k)
        total += -term if k % 2 else term
    return total


def gw_binet_rhs(x: int, y: int, n: int) -> int:
    """sum_{k=0}^{n//2} (-1)^k C(n-k,k) (xy)^k (x+y)^(n-2k), which is (x^(n+1) - y^(n+1))/(x - y)."""
    if n < 0:
        raise ValueError(f"gw_binet_rhs: n must be >= 0, got {n}")
    if x == y:
        raise ValueError("gw_binet_rhs: x and y must differ")
    s, p = x + y, x * y
    total = 0
    for k in range(n // 2 + 1):
        term = binomial(n - k, k) * p**k * s ** (n - 2 * k)
        total += -term if k % 2 else term
    return total


def gw_general_binet_lhs_rhs(x: int, y: int, a0: int, a1: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the Binet formula for the sequence with a_0, a_1 and
    characteristic roots x, y:

        lhs = (a1 - y a0)/(x - y) x^n - (a1 - x a0)/(x - y) y^n
        rhs = a1 (x+y)^(n-1) + sum_{j=1}^{n//2} (1/j) C(n-j-1, j-1) (-1)^j
              (xy)^j (x+y)^(n-2j-1) (j (x+y) a0 + (n-2j) a1)
    """
    if x == y:
        raise ValueError("gw_general_binet_lhs_rhs: x and y must differ")
    if n < 2:
        raise ValueError(f"gw_general_binet_lhs_rhs: n must be >= 2, got {n}")
    diff = x - y
    lhs = Fraction(a1 - y * a0, diff) * x**n - Fraction(a1 - x * a0, diff) * y**n
    s, p = x + y, x * y
    rhs = Fraction(a1 * s ** (n - 1))
    for j in range(1, n // 2 + 1):
        # split (x+y)^(n-2j-1) (j(x+y)a0 + (n-2j)a1) so that n = 2j never
        # produces a negative power of x+y
        e = n - 2 * j
        body = j * a0 * s**e
        if e:
            body += e * a1 * s ** (e - 1)
        term = Fraction(binomial(n - j - 1, j - 1) * p**j * body, j)
        rhs += -term if j % 2 else term
    return lhs, rhs


def gw_zero_sum_rhs(x: int, y: int, z: int, n: int) -> int:
    """sum_{k=1}^{n//2} (-1)^(n-k) n/(n-k) C(n-k,k) z^(n-2k) (xy)^k for x + y + z = 0.

    Equals x^n + y^n - z^n for even n and x^n + y^n + z^n for odd n.
    """
    if x + y + z != 0:
        raise ValueError(f"gw_zero_sum_rhs: need x + y + z = 0, got {x} + {y} + {z}")
    if n < 2:
        raise ValueError(f"gw_zero_sum_rhs: n must be >= 2, got {n}")
    p = x * y
    total = 0
    for k in range(1, n // 2 + 1):
        term = lucas_coeff(n, k) * z ** (n - 2 * k) * p**k
        total += -term if (n - k) % 2 else term
    return total


def check_prop_pxy(x: int, y: int, p: int) -> DivisibilityReport:
    """p x y (x+y) divides x^p + y^p - (x+y)^p for a prime p >= 3."""
    params = {"x": x, "y": y, "p": p}
    if x < 1 or y < 1:
        return DivisibilityReport.refused("prop-3.3", params, "x and y must be positive")
    if p < 3 or not is_prime(p):
        return DivisibilityReport.refused("prop-3.3", params, "p must be a prime >= 3")
    modulus = p * x * y * (x + y)
    value = pow(x, p, modulus) + pow(y, p, modulus) - pow(x + y, p, modulus)
    return DivisibilityReport.evaluate("prop-3.3", params, modulus, value, 0)


def gw_power_report(x: int, y: int, n: int) -> DivisibilityReport:
    params = {"x": x, "y": y, "n": n}
    if n < 1:
        return DivisibilityReport.refused("gw-power", params, "n must be >= 1")
    return DivisibilityReport.evaluate("gw-power", params, None, x**n + y**n, gw_power_sum_rhs(x, y, n))


def gw_binet_report(x: int, y: int, n: int) -> DivisibilityReport:
    params = {"x": x, "y": y, "n": n}
    if n < 0 or x == y:
        return DivisibilityReport.refused("gw-binet", params, "need n >= 0 and x != y")
    lhs = (x ** (n + 1) - y ** (n + 1)) // (x - y)
    return DivisibilityReport.evaluate("gw-binet", params, None, lhs, gw_binet_rhs(x, y, n))


def gw_zero_report(x: int, y: int, n: int) -> DivisibilityReport:
    """Zero-sum form with z = -(x + y)."""
    z = -(x + y)
    params = {"x": x, "y": y, "z": z, "n": n}
    if n < 2:
        return DivisibilityReport.refused("gw-zero", params, "n must be >= 2")
    lhs = x**n + y**n + (z**n if n % 2 else -(z**n))
    return DivisibilityReport.evaluate("gw-zero", params, None, lhs, gw_zero_sum_rhs(x, y, z, n))


def gw_general_report(x: int, y: int, a0: int, a1: int, n: int) -> DivisibilityReport:
    params = {"x": x, "y": y, "a0": a0, "a1": a1, "n": n}
    if n < 2 or x == y:
        return DivisibilityReport.refused("gw-general", params, "need n >= 2 and x != y")
    lhs, rhs = gw_general_binet_lhs_rhs(x, y, a0, a1, n)
    return DivisibilityReport.evaluate("gw-general", params, None, lhs, rhs)
