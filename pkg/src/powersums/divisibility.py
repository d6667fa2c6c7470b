"""Congruence checks for sums of powers and a search engine over exponents.

Every checker reduces term by term with modular powers, so exponents such
as p(p-1)l never produce full-size integers. Full big-integer values appear
only where a check needs an exact rational (integrality) or in tests that
cross-verify the modular path.

A checker whose hypotheses are not met returns a "precondition-failed"
report instead of raising; grid sweeps over mixed parameter sets rely on it.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from powersums.exact_core import binomial, is_prime, prime_factors, prime_power
from powersums.report import DivisibilityReport
from powersums.special_numbers import BernoulliConvention, bernoulli, stirling2_row

__all__ = [
    "DivisibilityReport",
    "SearchResult",
    "power_sum_mod",
    "check_mk_pair",
    "check_block",
    "check_prime_power_block",
    "residue_even_m",
    "check_s2l3",
    "check_euler_block",
    "check_cor49",
    "ds_predicate",
    "ds_refined_predicate",
    "ds_report",
    "check_prime_power_square",
    "check_pq",
    "pq_multiplier",
    "check_k_mult_of_n",
    "check_arith_prog",
    "check_shifted_prop",
    "check_sp_p",
    "check_integrality",
    "search_k",
]

# Stirling restatement of the prime-power block sum is checked only while
# the triangle row m*p stays small.
HSU_CHECK_LIMIT = 150


def power_sum_mod(n: int, k: int, modulus: int, start: int = 1) -> int:
    """(start^k + ... + n^k) mod modulus."""
    return sum(pow(j, k, modulus) for j in range(start, n + 1)) % modulus


def _odd(v: int) -> bool:
    return v % 2 == 1


def check_mk_pair(x: int, y: int, m: int, k: int, claim_id: str = "prop-4.4") -> DivisibilityReport:
    """x^(mk) + y^(mk) = 0 (mod k^2) when x + y = k with k, m odd."""
    params = {"x": x, "y": y, "m": m, "k": k}
    if x < 1 or y < 1 or x + y != k:
        return DivisibilityReport.refused(claim_id, params, "need positive x, y with x + y = k")
    if k < 3 or not _odd(k) or m < 1 or not _odd(m):
        return DivisibilityReport.refused(claim_id, params, "need odd k >= 3 and odd m >= 1")
    if claim_id == "prop-4.1" and not is_prime(k):
        return DivisibilityReport.refused(claim_id, params, "prop-4.1 needs k = p prime")
    mod = k * k
    value = pow(x, m * k, mod) + pow(y, m * k, mod)
    return DivisibilityReport.evaluate(claim_id, params, mod, value, 0)


def check_block(m: int, k: int, claim_id: str = "prop-4.5") -> DivisibilityReport:
    """S(m,k) and S'(m,k) both vanish mod k^2 for odd m, k."""
    params = {"m": m, "k": k}
    if m < 1 or k < 1 or not _odd(m) or not _odd(k):
        return DivisibilityReport.refused(claim_id, params, "m and k must be odd positive integers")
    if claim_id == "cor-4.2" and (k < 3 or not is_prime(k)):
        return DivisibilityReport.refused(claim_id, params, "cor-4.2 needs k = p prime >= 3")
    mod = k * k
    s_prime = power_sum_mod(k - 1, m * k, mod)
    s_full = (s_prime + pow(k, m * k, mod)) % mod
    return DivisibilityReport.evaluate(
        claim_id, params, mod, s_full, 0,
        details={"S_prime_residue": s_prime},
        extra_ok=s_prime == 0,
    )


def check_prime_power_block(m: int, p: int, t: int) -> DivisibilityReport:
    """1^(mp) + ... + (p^t)^(mp) = 0 (mod p^(t+1)), with and without the last term."""
    params = {"m": m, "p": p, "t": t}
    if p < 3 or not is_prime(p):
        return DivisibilityReport.refused("prop-4.3", params, "p must be a prime >= 3")
    if m < 1 or not _odd(m) or t < 1:
        return DivisibilityReport.refused("prop-4.3", params, "need odd m >= 1 and t >= 1")
    top = p**t
    mod = p ** (t + 1)
    e = m * p
    s_prime = power_sum_mod(top - 1, e, mod)
    s_full = (s_prime + pow(top, e, mod)) % mod
    details: dict[str, object] = {"S_prime_residue": s_prime}
    extra_ok = s_prime == 0
    if e <= HSU_CHECK_LIMIT:
        row = stirling2_row(e)
        hsu = 0
        fact = 1
        for j in range(1, e + 1):
            fact *= j
            hsu += fact * row[j] * binomial(top + 1, j + 1)
        details["hsu_residue"] = hsu % mod
        extra_ok = extra_ok and hsu % mod == s_full
    return DivisibilityReport.evaluate("prop-4.3", params, mod, s_full, 0, details=details, extra_ok=extra_ok)


def _pair_product_sum(k: int, e: int, mod: int, negate: bool = False) -> int:
    # sum over u + v = k, 0 < u < v of (uv)^e, or of (-uv)^e
    total = 0
    for u in range(1, (k + 1) // 2):
        v = k - u
        if u >= v:
            break
        base = -u * v if negate else u * v
        total += pow(base, e, mod)
    return total % mod


def residue_even_m(m: int, k: int) -> DivisibilityReport:
    """S(m,k) against 2 (-1)^(m/2) sum_{u+v=k, u<v} (uv)^(mk/2) mod k^2, k odd, m even."""
    params = {"m": m, "k": k}
    if k < 3 or not _odd(k) or m < 2 or _odd(m):
        return DivisibilityReport.refused("prop-4.6", params, "need odd k >= 3 and even m >= 2")
    mod = k * k
    computed = power_sum_mod(k, m * k, mod)
    pairs = _pair_product_sum(k, m * k // 2, mod)
    sign = -1 if (m // 2) % 2 else 1
    predicted = 2 * sign * pairs
    return DivisibilityReport.evaluate("prop-4.6", params, mod, computed, predicted)


def check_s2l3(l: int) -> DivisibilityReport:
    """S(2l, 3) = 2 (mod 9)."""
    params = {"l": l}
    if l < 1:
        return DivisibilityReport.refused("cor-4.7", params, "l must be >= 1")
    return DivisibilityReport.evaluate("cor-4.7", params, 9, power_sum_mod(3, 6 * l, 9), 2)


def check_euler_block(p: int, l: int) -> DivisibilityReport:
    """S((p-1)l, p) = p - 1 (mod p^2)."""
    params = {"p": p, "l": l}
    if p < 3 or not is_prime(p):
        return DivisibilityReport.refused("prop-4.8", params, "p must be a prime >= 3")
    if l < 1:
        return DivisibilityReport.refused("prop-4.8", params, "l must be >= 1")
    mod = p * p
    return DivisibilityReport.evaluate("prop-4.8", params, mod, power_sum_mod(p, (p - 1) * l * p, mod), p - 1)


def check_cor49(p: int) -> DivisibilityReport:
    """2 sum_{u+v=p, 0<u<v} (-uv)^(p(p-1)/2) = p - 1 (mod p^2)."""
    params = {"p": p}
    if p < 3 or not is_prime(p):
        return DivisibilityReport.refused("cor-4.9", params, "p must be a prime >= 3")
    mod = p * p
    lhs = 2 * _pair_product_sum(p, p * (p - 1) // 2, mod, negate=True)
    return DivisibilityReport.evaluate("cor-4.9", params, mod, lhs, p - 1)


def ds_predicate(n: int, k: int) -> tuple[bool, bool]:
    """(criterion, truth) for n | S_k(n).

    The criterion: no prime p dividing n has p - 1 dividing k.
    """
    if n < 1 or k < 1:
        raise ValueError(f"ds_predicate: need n, k >= 1, got ({n}, {k})")
    predicted = all(k % (p - 1) != 0 for p in prime_factors(n))
    actual = power_sum_mod(n, k, n) == 0
    return predicted, actual


def ds_refined_predicate(n: int, k: int) -> bool:
    """Divisibility criterion for n | S_k(n) with the 4 | n, odd k >= 3 case patched.

    The prime criterion of :func:`ds_predicate` calls every such pair
    non-divisible (p = 2 gives p - 1 = 1 | k), yet S_3(4) = 100 is a
    multiple of 4. For odd k >= 3 and even n this uses n = 0 (mod 4) instead.
    Checked exhaustively on n <= 200, k <= 50; not proven here.
    """
    if n % 2 == 0 and k % 2 == 1 and k >= 3:
        return n % 4 == 0
    return all(k % (p - 1) != 0 for p in prime_factors(n))


def ds_report(n: int, k: int) -> DivisibilityReport:
    """Report form of :func:`ds_predicate`; relation "!=" encodes a predicted non-divisibility."""
    params = {"n": n, "k": k}
    if n < 1 or k < 1:
        return DivisibilityReport.refused("thm-4.11", params, "need n, k >= 1")
    predicted, _ = ds_predicate(n, k)
    computed = power_sum_mod(n, k, n)
    return DivisibilityReport.evaluate(
        "thm-4.11", params, n, computed, 0,
        relation="==" if predicted else "!=",
        details={
            "predicted_divisible": predicted,
            "actual_divisible": computed == 0,
            "refined_predicted_divisible": ds_refined_predicate(n, k),
        },
    )


def check_prime_power_square(p: int, alpha: int, k: int) -> DivisibilityReport:
    """(p^alpha)^2 | S_k(p^alpha) for odd k >= 3 when p - 1 does not divide k - 1."""
    params = {"p": p, "alpha": alpha, "k": k}
    if p < 3 or not is_prime(p):
        return DivisibilityReport.refused("thm-4.12", params, "p must be an odd prime")
    if alpha < 1 or k < 3 or not _odd(k):
        return DivisibilityReport.refused("thm-4.12", params, "need alpha >= 1 and odd k >= 3")
    if (k - 1) % (p - 1) == 0:
        reason = "p - 1 divides k - 1"
        if p == 3:
            reason += " (always the case for p = 3 and odd k; the claim is vacuous there)"
        return DivisibilityReport.refused("thm-4.12", params, reason)
    n = p**alpha
    mod = n * n
    return DivisibilityReport.evaluate("thm-4.12", params, mod, power_sum_mod(n, k, mod), 0)


def pq_multiplier(p: int, q: int, k: int) -> int:
    """q when k = 1 (mod q-1) and k != q, else 1."""
    return q if (k - 1) % (q - 1) == 0 and k != q else 1


def check_pq(p: int, q: int, k: int) -> DivisibilityReport:
    """(pq)^2 | d S_k(pq) for k outside 1 + (p-1)Z, with d from :func:`pq_multiplier`.

    When additionally k is outside 1 + (q-1)Z the multiplier is 1.
    """
    params = {"p": p, "q": q, "k": k}
    if p == q or p < 3 or q < 3 or not is_prime(p) or not is_prime(q):
        return DivisibilityReport.refused("thm-4.13", params, "p and q must be distinct odd primes")
    if k < 3 or not _odd(k):
        return DivisibilityReport.refused("thm-4.13", params, "k must be odd and >= 3")
    in_a = (k - 1) % (p - 1) != 0
    in_b = (k - 1) % (q - 1) == 0
    if not in_a:
        return DivisibilityReport.refused("thm-4.13", params, "k = 1 (mod p - 1): k is not in A")
    d = pq_multiplier(p, q, k)
    n = p * q
    mod = n * n
    s = power_sum_mod(n, k, mod)
    return DivisibilityReport.evaluate(
        "thm-4.13", params, mod, d * s, 0,
        details={"in_A": in_a, "in_B": in_b, "d": d, "S_residue": s},
    )


def check_k_mult_of_n(n: int, k: int) -> DivisibilityReport:
    """n^2 | S_k(n) for odd n, odd k >= 3 with n | k."""
    params = {"n": n, "k": k}
    if n < 1 or not _odd(n) or k < 3 or not _odd(k) or k % n:
        return DivisibilityReport.refused("prop-4.10", params, "need odd n, odd k >= 3 and n | k")
    mod = n * n
    return DivisibilityReport.evaluate("prop-4.10", params, mod, power_sum_mod(n, k, mod), 0)


def check_arith_prog(a: int, d: int, k: int) -> DivisibilityReport:
    """a^k + (a+d)^k + ... + (a+(k-1)d)^k = 0 (mod k^2) for odd k, gcd(d, k) = 1."""
    params = {"a": a, "d": d, "k": k}
    if a < 1 or d < 1 or k < 1 or not _odd(k):
        return DivisibilityReport.refused("thm-3.1", params, "need a, d >= 1 and odd k >= 1")
    if math.gcd(d, k) != 1:
        return DivisibilityReport.refused("thm-3.1", params, "gcd(d, k) != 1")
    mod = k * k
    value = sum(pow(a + i * d, k, mod) for i in range(k))
    return DivisibilityReport.evaluate("thm-3.1", params, mod, value, 0)


def check_shifted_prop(p: int, n: int, x: int, m: int) -> DivisibilityReport:
    """(x+1)^m + ... + (x+n)^m against 0 mod p^2, for p | n and p | 2x+1.

    The residue is computed for every m >= 0, but m = 0 (where the sum is
    just n) is reported with ``details["asserted"] = False``. The claim does
    not hold in general for even m or for odd m >= 5; the report simply says
    whether it held for these parameters.
    """
    params = {"p": p, "n": n, "x": x, "m": m}
    if p < 3 or not is_prime(p):
        return DivisibilityReport.refused("prop-3.2", params, "p must be a prime >= 3")
    if n < 1 or n % p or x < 1 or (2 * x + 1) % p or m < 0:
        return DivisibilityReport.refused("prop-3.2", params, "need p | n, positive x with p | 2x+1, m >= 0")
    mod = p * p
    value = sum(pow(x + i, m, mod) for i in range(1, n + 1))
    details = {"asserted": m != 0}
    note = "m = 0 reduces to n = 0 (mod p^2); not implied by p | n" if m == 0 else ""
    return DivisibilityReport.evaluate("prop-3.2", params, mod, value, 0, details=details, note=note)


def check_sp_p(p: int) -> DivisibilityReport:
    """p | S_p(p)."""
    params = {"p": p}
    if p < 3 or not is_prime(p):
        return DivisibilityReport.refused("cor-5.2", params, "p must be a prime >= 3")
    return DivisibilityReport.evaluate("cor-5.2", params, p, power_sum_mod(p, p, p), 0)


def _faulhaber_quotient(n: int, k: int, convention: BernoulliConvention) -> Fraction:
    # (1/(k+1)) sum_l [(-1)^l] C(k+1, l) B_l n^(k-l-1), i.e. S_k(n)/n^2
    acc = Fraction(0)
    n_frac = Fraction(n)
    for l in range(k + 1):
        b = bernoulli(l, convention)
        if not b:
            continue
        term = binomial(k + 1, l) * b * n_frac ** (k - l - 1)
        if convention is BernoulliConvention.FIRST and l % 2:
            term = -term
        acc += term
    return acc / (k + 1)


def integrality_hypothesis(n: int, k: int) -> str | None:
    """Which hypothesis of the integrality statement (n, k) meets, if any."""
    if n < 3 or k < 3 or not _odd(n) or not _odd(k):
        return None
    if k % n == 0:
        return "k = 0 (mod n)"
    pp = prime_power(n)
    if pp is not None and (k - 1) % (pp[0] - 1) != 0:
        return "n = p^alpha, p - 1 does not divide k - 1"
    return None


def check_integrality(n: int, k: int) -> DivisibilityReport:
    """S_k(n)/n^2, written through both Bernoulli-convention Faulhaber forms, is a natural number."""
    params = {"n": n, "k": k}
    hyp = integrality_hypothesis(n, k)
    if hyp is None:
        return DivisibilityReport.refused(
            "cor-4.13", params, "need odd n, k >= 3 with n | k, or n = p^alpha and p - 1 not dividing k - 1"
        )
    q_second = _faulhaber_quotient(n, k, BernoulliConvention.SECOND)
    q_first = _faulhaber_quotient(n, k, BernoulliConvention.FIRST)
    exact = sum(j**k for j in range(1, n + 1))
    mod = n * n
    natural = all(q.denominator == 1 and q >= 0 for q in (q_second, q_first))
    consistent = q_second == q_first == Fraction(exact, mod)
    return DivisibilityReport.evaluate(
        "cor-4.13", params, mod, exact, 0,
        details={
            "hypothesis": hyp,
            "quotient_second_kind": str(q_second),
            "quotient_first_kind": str(q_first),
            "natural": natural,
            "matches_power_sum": consistent,
        },
        extra_ok=natural and consistent,
    )


@dataclass(frozen=True)
class SearchResult:
    """Exponents k in ``k_range`` with n^2 | S_k(n)."""

    n: int
    modulus: int
    passing_k: tuple[int, ...]
    k_range: tuple[int, int]
    odd_only: bool = False
    candidates: tuple[int, ...] | None = None

    def to_json(self) -> dict[str, object]:
        out: dict[str, object] = {
            "n": str(self.n),
            "modulus": str(self.modulus),
            "k_range": [str(self.k_range[0]), str(self.k_range[1])],
            "odd_only": self.odd_only,
            "passing_k": [str(k) for k in self.passing_k],
        }
        if self.candidates is not None:
            out["candidates"] = [str(k) for k in self.candidates]
            out["failing_k"] = [str(k) for k in self.candidates if k not in set(self.passing_k)]
        return out


def _scan_chunk(n: int, ks: Sequence[int]) -> list[int]:
    mod = n * n
    bases = range(1, n + 1)
    return [k for k in ks if sum(pow(j, k, mod) for j in bases) % mod == 0]


def _chunks(seq: Sequence[int], parts: int) -> list[Sequence[int]]:
    size = max(1, -(-len(seq) // parts))
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def search_k(
    n: int,
    k_lo: int,
    k_hi: int,
    odd_only: bool = False,
    *,
    jobs: int = 1,
    candidates: Iterable[int] | None = None,
    executor: ProcessPoolExecutor | None = None,
) -> SearchResult:
    """All k in [k_lo, k_hi] with S_k(n) = 0 (mod n^2).

    ``candidates`` restricts the scan to listed exponents (still clipped to
    the range and parity filter). The range is split into contiguous chunks
    that may run in worker processes; results are merged in chunk order, so
    the output does not depend on ``jobs``.
    """
    if n < 1:
        raise ValueError(f"search_k: n must be >= 1, got {n}")
    if k_lo < 1 or k_hi < k_lo:
        raise ValueError(f"search_k: need 1 <= k_lo <= k_hi, got ({k_lo}, {k_hi})")
    if candidates is None:
        ks = [k for k in range(k_lo, k_hi + 1) if not odd_only or _odd(k)]
        cand_tuple = None
    else:
        cand_tuple = tuple(sorted(set(candidates)))
        ks = [k for k in cand_tuple if k_lo <= k <= k_hi and (not odd_only or _odd(k))]
    if jobs <= 1 and executor is None or len(ks) < 2:
        passing = _scan_chunk(n, ks)
    else:
        parts = _chunks(ks, max(jobs, 1))
        if executor is not None:
            results = list(executor.map(_scan_chunk, [n] * len(parts), parts))
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_scan_chunk, [n] * len(parts), parts))
        passing = [k for chunk in results for k in chunk]
    return SearchResult(
        n=n,
        modulus=n * n,
        passing_k=tuple(passing),
        k_range=(k_lo, k_hi),
        odd_only=odd_only,
        candidates=cand_tuple,
    )
