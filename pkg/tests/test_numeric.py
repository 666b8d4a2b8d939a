import math

import mpmath as mp
import numpy as np
import pytest

from mzxi import polylog, star_to_ordinary, zeta_infinite, zeta_star_infinite
from oracles import mzv_depth2, polylog_brute

BRUTE_TERMS = 10**6
# rounding allowance for the brute-force cumulative sums: gamma_n with n = BRUTE_TERMS
BRUTE_REL = BRUTE_TERMS * 2.0**-53 / (1 - BRUTE_TERMS * 2.0**-53)


def direct_zeta_odd(k, N=10**5):
    """sum_{n<=N} n^-k plus the midpoint of the integral enclosure of the tail."""
    head = math.fsum(1.0 / np.arange(1, N + 1, dtype=float) ** k)
    lo, hi = 1 / ((k - 1) * (N + 1) ** (k - 1)), 1 / ((k - 1) * N ** (k - 1))
    return head + (lo + hi) / 2, (hi - lo) / 2 + N * 2.0**-53


def test_polylog_closed_form():
    r = polylog((1,), 0.5, 1e-12)
    assert abs(r.value - math.log(2)) <= r.error_bound + 1e-16
    assert r.error_bound <= 1e-12


def test_polylog_at_zero():
    assert polylog((2,), 0.0).value == 0.0


def test_polylog_depth2_brute_force():
    r = polylog((2, 1), 0.9, 1e-10)
    assert r.error_bound <= 1e-10
    assert abs(r.value - polylog_brute((2, 1), 0.9)) <= 1e-9


@pytest.mark.parametrize("c", [(1,), (2,), (5,), (1, 1), (2, 1), (1, 2), (3, 2), (1, 1, 1), (1, 2, 2), (2, 1, 1, 1)])
@pytest.mark.parametrize("z", [0.1, 0.5, 0.9])
def test_polylog_oracle_agreement(c, z):
    r = polylog(c, z, 1e-11)
    b = polylog_brute(c, z, BRUTE_TERMS)
    assert abs(r.value - b) <= r.error_bound + BRUTE_REL * abs(b)


@pytest.mark.parametrize("c", [(2,), (2, 1), (3, 1, 1), (4,)])
def test_polylog_limit(c):
    # 0 <= zeta - Li(1 - eps) <= sum_n min(1, n eps) a_n <= 2 eps (1 + ln(1/eps))^depth for k1 >= 2
    eps, tol = 1e-6, 1e-8
    li, zi = polylog(c, 1 - eps, tol), zeta_infinite(c, tol)
    gap = zi.value - li.value
    assert -(li.error_bound + zi.error_bound) <= gap
    assert gap <= 2 * eps * (1 + math.log(1 / eps)) ** len(c) + 10 * tol


def test_polylog_rejects():
    with pytest.raises(ValueError):
        polylog((2,), 1.0)
    with pytest.raises(ValueError):
        polylog((2,), -0.1)
    with pytest.raises(ValueError):
        polylog((), 0.5)


def test_zeta2():
    r = zeta_infinite((2,), 1e-8)
    assert r.error_bound <= 1e-8
    assert abs(r.value - float(mp.zeta(2))) <= r.error_bound + 1e-15
    assert abs(r.value - 1.64493406) < 1e-8


def test_zeta21_two_evaluations():
    r = zeta_infinite((2, 1), 1e-7)
    assert r.error_bound <= 1e-7
    assert abs(r.value - float(mzv_depth2(2, 1))) <= r.error_bound + 1e-15
    z3 = zeta_infinite((3,), 1e-7)
    assert abs(r.value - z3.value) <= r.error_bound + z3.error_bound
    assert abs(r.value - 1.20205690) < 1e-7


def test_zeta5_direct_summation():
    r = zeta_infinite((5,), 1e-10)
    ref, ref_err = direct_zeta_odd(5)
    assert r.error_bound <= 1e-10
    assert abs(r.value - ref) <= r.error_bound + ref_err
    assert abs(r.value - 1.03692775) < 1e-8


@pytest.mark.parametrize("a, b", [(2, 2), (3, 1), (2, 3), (4, 1)])
def test_depth2_oracle(a, b):
    r = zeta_infinite((a, b), 1e-11)
    assert abs(r.value - float(mzv_depth2(a, b))) <= r.error_bound + 1e-15


def test_zeta_211_duality():
    # zeta(2,1,1) = zeta(4) by duality
    r = zeta_infinite((2, 1, 1), 1e-10)
    assert abs(r.value - float(mp.zeta(4))) <= r.error_bound + 1e-15


def test_infinite_stuffle():
    z2 = zeta_infinite((2,), 1e-12)
    rhs = [zeta_infinite((2, 2), 1e-12), zeta_infinite((2, 2), 1e-12), zeta_infinite((4,), 1e-12)]
    total = sum(r.value for r in rhs)
    allowed = sum(r.error_bound for r in rhs) + 2 * z2.value * z2.error_bound + 1e-15
    assert abs(z2.value**2 - total) <= allowed


def test_zeta_rejects_non_admissible():
    for c in [(1,), (1, 2), ()]:
        with pytest.raises(ValueError):
            zeta_infinite(c)
    with pytest.raises(ValueError):
        zeta_infinite((2,), 1e-15)


def test_max_terms_reports_achieved_bound():
    r = zeta_infinite((2, 1), 1e-12, max_terms=2000)
    assert r.error_bound > 1e-12
    assert r.contains(float(mp.zeta(3)))


def test_star_depth_one():
    a, b = zeta_star_infinite((3,), 1e-10), zeta_infinite((3,), 1e-10)
    assert a.value == b.value


def test_star_21():
    r = zeta_star_infinite((2, 1), 1e-7)
    ref = float(mp.zeta(3) + mzv_depth2(2, 1))
    assert r.error_bound <= 1e-7 and abs(r.value - ref) <= r.error_bound + 1e-15


def test_star_211():
    r = zeta_star_infinite((2, 1, 1), 1e-6)
    parts = [zeta_infinite(d, 1e-9) for d in [(4,), (3, 1), (2, 2), (2, 1, 1)]]
    assert [tuple(d) for d in star_to_ordinary((2, 1, 1))] == [(4,), (2, 2), (3, 1), (2, 1, 1)]
    assert abs(r.value - sum(p.value for p in parts)) <= r.error_bound + sum(p.error_bound for p in parts)
    ref = float(2 * mp.zeta(4) + mzv_depth2(3, 1) + mzv_depth2(2, 2))
    assert abs(r.value - ref) <= r.error_bound + 1e-15


@pytest.mark.parametrize("c", [(2,), (3,), (2, 1), (3, 1), (2, 1, 1), (4, 1, 2)])
def test_refined_run_inside_interval(c):
    coarse = zeta_infinite(c, 1e-8)
    fine = zeta_infinite(c, 1e-10)
    assert coarse.contains(fine.value)
    p_coarse, p_fine = polylog(c, 0.95, 1e-8), polylog(c, 0.95, 1e-10)
    assert p_coarse.contains(p_fine.value)
