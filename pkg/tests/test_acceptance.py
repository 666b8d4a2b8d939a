"""One test per acceptance criterion; each records a PASS/FAIL line."""

import math
import time
from contextlib import contextmanager

import mpmath as mp
import numpy as np
import pytest

from mzxi import NumericConfig, xi_integral, xi_series, xi_stuffle_route, zeta_infinite, zeta_star_infinite
from mzxi.verify import binomial_suite, reduce_suite, star_suite, stuffle_suite, truncation_suite

pytestmark = pytest.mark.acceptance


@contextmanager
def criterion(log, number, title, limit=None):
    info = {"detail": ""}
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield info
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"runtime {elapsed:.1f}s exceeds {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number:>2} {status}: {title} ({elapsed:.1f}s) {info['detail']}".rstrip()
        log.append(line)
        print(line)


def assert_all_ok(cases, info):
    cases = list(cases)
    failures = [c for c in cases if not c.ok]
    info["detail"] = f"{len(cases) - len(failures)}/{len(cases)} cases"
    assert not failures, failures[:3]


def direct_zeta(k, N=10**5):
    """sum_{n<=N} n^-k plus the midpoint of the integral enclosure of the tail; returns (value, error)."""
    head = math.fsum(1.0 / np.arange(1, N + 1, dtype=float) ** k)
    lo, hi = 1 / ((k - 1) * (N + 1) ** (k - 1)), 1 / ((k - 1) * N ** (k - 1))
    return head + (lo + hi) / 2, (hi - lo) / 2 + N * 2.0**-53


# numeric cases shared by criteria 5-8 and the soundness audit of criterion 10
DEPTH_ONE = [(k, n) for k in (1, 2, 3) for n in (1, 2, 3)]
STUFFLE = [(c, n) for c in ((2,), (3,), (2, 1), (3, 1), (2, 1, 1)) for n in (1, 2, 3)]
INTEGRAL = [(c, n) for c in ((1,), (2,), (3,), (2, 1)) for n in (1, 2)]
TOL5, TOL6, TOL7 = 5e-7, 5e-7, 5e-6
ANCHOR_TOL, ZETA4_TOL = 1e-7, 1e-8


def test_criterion_1_stuffle_identity(acceptance_log):
    with criterion(acceptance_log, 1, "exact stuffle identity, weight <= 7, N <= 20", 120) as info:
        assert_all_ok(stuffle_suite(7, 20), info)


def test_criterion_2_star_conversion(acceptance_log):
    with criterion(acceptance_log, 2, "exact star conversion, depth <= 5, parts <= 3, N <= 30", 30) as info:
        assert_all_ok(star_suite(5, 3, 30), info)


def test_criterion_3_binomial(acceptance_log):
    with criterion(acceptance_log, 3, "exact alternating binomial identity, n <= 40, r <= 6", 10) as info:
        assert_all_ok(binomial_suite(40, 6), info)


def test_criterion_4_reduction(acceptance_log):
    with criterion(acceptance_log, 4, "exact upper-limit reduction, depth <= 5, parts <= 3, N <= 30", 30) as info:
        assert_all_ok(reduce_suite(5, 3, 30), info)


def test_criterion_5_zeta_star(acceptance_log):
    with criterion(acceptance_log, 5, "xi_k(n) = zeta*(k+1,{1}^(n-1)), within 1e-6, bounds <= 5e-7", 60) as info:
        worst = 0.0
        cfg = NumericConfig(tol=TOL5)
        for k, n in DEPTH_ONE:
            a = xi_series((k,), n, cfg)
            b = zeta_star_infinite((k + 1,) + (1,) * (n - 1), TOL5)
            assert a.error_bound <= 5e-7 and b.error_bound <= 5e-7, (k, n, a, b)
            diff = abs(a.value - b.value)
            worst = max(worst, diff)
            assert diff <= 1e-6, (k, n, diff)
        info["detail"] = f"max |diff| = {worst:.2e}"


def test_criterion_6_series_vs_stuffle(acceptance_log):
    with criterion(acceptance_log, 6, "series route vs stuffle route within 1e-6", 300) as info:
        worst = 0.0
        cfg = NumericConfig(tol=TOL6)
        for c, n in STUFFLE:
            a, b = xi_series(c, n, cfg), xi_stuffle_route(c, n, cfg)
            diff = abs(a.value - b.value)
            worst = max(worst, diff)
            assert diff <= 1e-6, (c, n, diff)
        info["detail"] = f"max |diff| = {worst:.2e}"


def test_criterion_7_integral_vs_series(acceptance_log):
    with criterion(acceptance_log, 7, "integral route vs series route within 1e-5", 300) as info:
        worst = 0.0
        cfg = NumericConfig(tol=TOL7)
        for c, n in INTEGRAL:
            a, b = xi_integral(c, n, cfg), xi_series(c, n, cfg)
            diff = abs(a.value - b.value)
            worst = max(worst, diff)
            assert diff <= 1e-5, (c, n, diff)
        info["detail"] = f"max |diff| = {worst:.2e}"


def test_criterion_8_anchors(acceptance_log):
    with criterion(acceptance_log, 8, "spot anchors zeta(3), zeta(2) via xi and zeta(4)") as info:
        cfg = NumericConfig(tol=ANCHOR_TOL)
        for c, literal, oracle in (((2,), 1.2020569, direct_zeta(3)), ((1,), 1.6449341, direct_zeta(2))):
            for route in (xi_series, xi_integral):
                r = route(c, 1, cfg)
                assert abs(r.value - literal) <= 1e-6, (c, route.__name__, r)
                assert abs(r.value - oracle[0]) <= r.error_bound + oracle[1], (c, route.__name__, r, oracle)
        z4 = zeta_infinite((4,), ZETA4_TOL)
        ref, ref_err = direct_zeta(4)
        assert abs(z4.value - 1.0823232) <= 1e-7, z4
        assert abs(z4.value - ref) <= z4.error_bound + ref_err
        assert abs(ref - float(mp.zeta(4))) <= ref_err
        info["detail"] = f"zeta(4) = {z4.value:.10f}"


def test_criterion_9_truncation(acceptance_log):
    with criterion(acceptance_log, 9, "exact finite truncation of the stuffle expansion, N <= 20", 60) as info:
        assert_all_ok(truncation_suite([(2, 1), (3, 1)], (2, 3), 20), info)


def _audit_cases():
    for k, n in DEPTH_ONE:
        yield f"series ({k}) n={n}", lambda tol, k=k, n=n: xi_series((k,), n, NumericConfig(tol=tol)), TOL5
        star = (k + 1,) + (1,) * (n - 1)
        yield f"zeta* {star}", lambda tol, star=star: zeta_star_infinite(star, tol), TOL5
    for c, n in STUFFLE:
        yield f"series {c} n={n}", lambda tol, c=c, n=n: xi_series(c, n, NumericConfig(tol=tol)), TOL6
        yield f"stuffle {c} n={n}", lambda tol, c=c, n=n: xi_stuffle_route(c, n, NumericConfig(tol=tol)), TOL6
    for c, n in INTEGRAL:
        yield f"integral {c} n={n}", lambda tol, c=c, n=n: xi_integral(c, n, NumericConfig(tol=tol)), TOL7
        yield f"series {c} n={n}", lambda tol, c=c, n=n: xi_series(c, n, NumericConfig(tol=tol)), TOL7
    for c in ((2,), (1,)):
        for route in (xi_series, xi_integral):
            yield (f"{route.__name__} {c} n=1",
                   lambda tol, c=c, route=route: route(c, 1, NumericConfig(tol=tol)), ANCHOR_TOL)
    yield "zeta (4)", lambda tol: zeta_infinite((4,), tol), ZETA4_TOL


def test_criterion_10_soundness(acceptance_log):
    with criterion(acceptance_log, 10, "rerun at tol/100 lands inside the coarse interval") as info:
        bad, total = [], 0
        for name, evaluate, tol in _audit_cases():
            coarse, fine = evaluate(tol), evaluate(tol / 100)
            total += 1
            if not coarse.contains(fine.value):
                bad.append((name, coarse, fine))
        info["detail"] = f"{total - len(bad)}/{total} cases"
        assert not bad, bad[:3]
