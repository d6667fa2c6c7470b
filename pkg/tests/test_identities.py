import pytest

from powersums.exact_core import is_prime
from powersums.identities import (
    check_prop_pxy,
    gw_binet_report,
    gw_binet_rhs,
    gw_general_binet_lhs_rhs,
    gw_general_report,
    gw_power_report,
    gw_power_sum_rhs,
    gw_zero_report,
    gw_zero_sum_rhs,
)

R = range(-20, 21)


def test_power_sum_examples():
    assert gw_power_sum_rhs(1, 1, 2) == 2
    assert gw_power_sum_rhs(2, 3, 5) == 275
    for x in range(-6, 7):
        for m in range(1, 8):
            assert gw_power_sum_rhs(x, -x, 2 * m) == 2 * x ** (2 * m)


def test_power_sum_grid():
    for x in R:
        for y in R:
            for n in range(1, 21):
                assert gw_power_sum_rhs(x, y, n) == x**n + y**n


def test_binet_examples():
    assert gw_binet_rhs(2, 1, 3) == 15
    assert gw_binet_rhs(3, 2, 4) == 211
    assert gw_binet_rhs(5, -5, 2) == 25
    with pytest.raises(ValueError):
        gw_binet_rhs(4, 4, 3)


def test_binet_grid():
    for x in R:
        for y in R:
            if x == y:
                continue
            for n in range(0, 21):
                assert gw_binet_rhs(x, y, n) * (x - y) == x ** (n + 1) - y ** (n + 1)


def test_general_binet_examples():
    for x, y in [(2, 1), (3, -2), (7, 4), (-5, 0)]:
        for n in range(2, 12):
            lhs, rhs = gw_general_binet_lhs_rhs(x, y, 0, 1, n)
            assert lhs == rhs == gw_binet_rhs(x, y, n - 1)
    assert len(set(gw_general_binet_lhs_rhs(2, 1, 1, 1, 3))) == 1
    assert len(set(gw_general_binet_lhs_rhs(3, -2, 2, 5, 4))) == 1
    with pytest.raises(ValueError):
        gw_general_binet_lhs_rhs(1, 1, 0, 1, 3)


def test_general_binet_grid():
    for x in R:
        for y in R:
            if x == y:
                continue
            for n in range(2, 21):
                for a0, a1 in [(0, 1), (1, 1), (2, 5), (-3, 4)]:
                    lhs, rhs = gw_general_binet_lhs_rhs(x, y, a0, a1, n)
                    assert lhs == rhs


def test_zero_sum_examples():
    assert gw_zero_sum_rhs(1, 2, -3, 3) == -18 == 1 + 8 - 27 == 3 * 1 * 2 * -3
    for x in range(-5, 6):
        for n in range(2, 9):
            expected = x**n + (-x) ** n
            assert gw_zero_sum_rhs(x, -x, 0, n) == expected
    assert gw_zero_sum_rhs(2, 5, -7, 6) == 2**6 + 5**6 - (-7) ** 6 == -101960
    with pytest.raises(ValueError):
        gw_zero_sum_rhs(1, 2, 3, 4)


def test_zero_sum_grid():
    for x in range(-12, 13):
        for y in range(-12, 13):
            z = -(x + y)
            for n in range(2, 15):
                sign = -1 if n % 2 == 0 else 1
                assert gw_zero_sum_rhs(x, y, z, n) == x**n + y**n + sign * z**n


def test_prop_pxy_examples():
    r = check_prop_pxy(1, 2, 3)
    assert r.holds and r.modulus == 18
    assert (1 + 8 - 27) % 18 == 0
    assert check_prop_pxy(4, 9, 13).holds
    for x in range(1, 8):
        for y in range(1, 8):
            assert check_prop_pxy(x, y, 3).holds


@pytest.mark.parametrize("p", [q for q in range(3, 24) if is_prime(q)])
def test_prop_pxy_grid(p):
    for x in range(1, 16):
        for y in range(1, 16):
            r = check_prop_pxy(x, y, p)
            assert r.holds
            assert (x**p + y**p - (x + y) ** p) % (p * x * y * (x + y)) == 0


def test_prop_pxy_preconditions():
    assert check_prop_pxy(1, 2, 9).precondition_failed
    assert check_prop_pxy(1, 2, 2).precondition_failed
    assert check_prop_pxy(0, 2, 5).precondition_failed


def test_reports():
    assert gw_power_report(3, -7, 9).holds
    assert gw_binet_report(3, -7, 9).holds
    assert gw_binet_report(3, 3, 9).precondition_failed
    r = gw_zero_report(2, 5, 6)
    assert r.holds and r.params["z"] == -7 and r.modulus is None
    assert gw_general_report(3, -2, 2, 5, 4).holds
