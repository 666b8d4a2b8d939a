"""The Arakawa-Kaneko function xi_{k1..kr}(n) at positive integers.

Three independent evaluations:

* ``xi_integral``: adaptive Simpson quadrature of the defining integral
  ``1/(n-1)! * int_0^inf t^(n-1) / (e^t - 1) * Li_c(1 - e^-t) dt``;
* ``xi_series``: ``sum_{m>=1} Z*_m({1}^(n-1)) Z_{m-1}(k2..kr) / m^(k1+1)``;
* ``xi_stuffle_route``: the same value expanded into a finite sum of
  multiple zeta values through comma deletion, the upper-limit reduction
  and the finite stuffle product.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ._series import U, NestedSums, moment, next_terms, poly_add, poly_mul, window_chain_upper
from .core import Composition, EvalResult, NumericConfig, as_composition, check_tol, compositions_of
from .finite_mzv import star_to_ordinary, zeta_finite_table
from .numeric import PolylogSeries, zeta_infinite, zeta_star_infinite
from .stuffle import stuffle_product

START_TERMS = 4096
NODE_TERMS_CAP = 1 << 22
NODE_SLACK = 256


def _check(c, n: int) -> Composition:
    c = as_composition(c)
    if not c:
        raise ValueError("xi needs a nonempty index composition")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"xi is evaluated at positive integers only, got n={n!r}")
    return c


# --- series route ------------------------------------------------------------


def _series_tail(c: Composition, n: int, N: int, star_fin: list[float], inner_fin: list[float]):
    """Lower and upper bounds on sum_{m>N} Z*_m({1}^(n-1)) Z_{m-1}(k') / m^s.

    Each factor splits at N into a window block with indices in (N, m]
    times a finite block with indices <= N. ``star_fin[i]`` is
    Z*_N({1}^(n-1-i)) and ``inner_fin[j]`` is Z_N(k'[j:]). Window blocks are
    bounded by polynomials in ln(m/N) from above and ln(m/(N+1)) from below.
    """
    s = c[0] + 1
    ones = n - 1
    kp = c[1:]
    a_up = [[1.0]]
    for i in range(1, ones + 1):
        p: list[float] = []
        for d in star_to_ordinary((1,) * i):
            p = poly_add(p, window_chain_upper(d, N))
        a_up.append(p)
    # h_i(x) >= p_1(x)^i / i! and the harmonic window sum is >= ln(m/(N+1))
    a_lo = [[0.0] * i + [1.0 / math.factorial(i)] for i in range(ones + 1)]
    b_up = [window_chain_upper(kp[:j], N) for j in range(len(kp) + 1)]
    b_lo = [[1.0]] + [[0.0, 1.0] if j == 1 and kp[0] == 1 else [] for j in range(1, len(kp) + 1)]

    upper = lower = 0.0
    up_scale = N ** (1.0 - s)
    lo_scale = (N + 2.0) ** (1.0 - s)
    for i in range(ones + 1):
        for j in range(len(kp) + 1):
            w = star_fin[i] * inner_fin[j]
            if not w:
                continue
            upper += w * up_scale * moment(poly_mul(a_up[i], b_up[j]), s - 1.0, 1.0 / N)
            low = poly_mul(a_lo[i], b_lo[j])
            if low:
                lower += w * lo_scale * moment(low, s - 1.0)
    return lower, upper


def xi_series(c, n: int, config: NumericConfig = NumericConfig()) -> EvalResult:
    """Sum the one-dimensional series for xi, enclosing the remainder."""
    c = _check(c, n)
    check_tol(config.tol)
    s = c[0] + 1
    star = NestedSums((1,) * (n - 1), star=True)
    inner = NestedSums(c[1:])
    partial = 0.0
    N = min(START_TERMS, config.max_terms)
    history: list = []
    while True:
        for (m, star_cur, _), (_, _, inner_prev) in zip(star.advance(N), inner.advance(N)):
            partial += float((star_cur[0] * inner_prev[0] * (1.0 / m) ** s).sum())
        lower, upper = _series_tail(c, n, N, star.values(), inner.values())
        value = partial + (lower + upper) / 2.0
        rel = star.rel_error() + inner.rel_error() + (s + 8) * U + U * star.chunks
        rounding = rel * value + 8 * U * upper
        bound = (upper - lower) / 2.0 + rounding
        if bound <= config.tol or N >= config.max_terms or rounding > config.tol:
            return EvalResult(value, bound, N)
        N = next_terms(N, bound, config.tol, history, float(s - 1), config.max_terms)


def series_partial_exact(c, n: int, N: int) -> Fraction:
    """sum_{m=1}^{N} Z*_m({1}^(n-1)) Z_{m-1}(k2..kr) / m^(k1+1) in exact rationals."""
    c = _check(c, n)
    star = zeta_finite_table(N, (1,) * (n - 1), star=True)
    inner = zeta_finite_table(N, c[1:])
    s = c[0] + 1
    return sum((star[m] * inner[m - 1] / m**s for m in range(1, N + 1)), Fraction(0))


# --- stuffle route -----------------------------------------------------------


def expansion_terms(c, n: int) -> Counter:
    """Multiple zeta values (with multiplicities) whose sum is xi_c(n).

    For every composition l of n-1 the star sum contributes
    zeta(k1+1, f) for f in st(l, k') and zeta(k1+1+l1, f) for f in
    st(tail(l), k'), where k' = (k2..kr). For n = 1 the only term is
    zeta(k1+1, k2, ..., kr).
    """
    c = _check(c, n)
    k1, kp = c[0], c.tail
    terms: Counter = Counter()
    if n == 1:
        terms[kp.prepend(k1 + 1)] += 1
        return terms
    for h in range(1, n):
        for ell in compositions_of(n - 1, h):
            for f, mult in stuffle_product(ell, kp).items():
                terms[f.prepend(k1 + 1)] += mult
            for f, mult in stuffle_product(ell.tail, kp).items():
                terms[f.prepend(k1 + 1 + ell[0])] += mult
    return terms


def expansion_partial_exact(c, n: int, N: int, table=None) -> Fraction:
    """The stuffle expansion with every zeta truncated at N, exactly."""
    total = Fraction(0)
    for g, mult in sorted(expansion_terms(c, n).items()):
        values = table(g) if table is not None else zeta_finite_table(N, g)
        total += mult * values[N]
    return total


def xi_stuffle_route(c, n: int, config: NumericConfig = NumericConfig()) -> EvalResult:
    c = _check(c, n)
    check_tol(config.tol)
    terms = expansion_terms(c, n)
    each = config.tol / sum(terms.values())
    total = EvalResult(0.0, 0.0)
    for g, mult in sorted(terms.items()):
        total = total + zeta_infinite(g, each, config.max_terms).scaled(mult)
    return EvalResult(total.value, total.error_bound * (1 + 4 * U * len(terms)), total.terms)


# --- integral route ----------------------------------------------------------


def _gamma_tail(n: int, T: float) -> float:
    """int_T^inf t^(n-1) e^-t dt / (n-1)!."""
    return math.exp(-T) * sum(T**j / math.factorial(j) for j in range(n))


def _integral_tail(n: int, r: int, li_upper: float | None, T: float) -> float:
    # integrand = t^(n-1) e^-t Li(z)/z / (n-1)!, with z >= 1 - e^-T past T
    zmin = -math.expm1(-T)
    if li_upper is not None:
        return li_upper * _gamma_tail(n, T) / zmin
    # Li_c(z) <= (-ln(1-z))^r / r! = t^r / r!
    return math.comb(n - 1 + r, r) * _gamma_tail(n + r, T) / zmin


def _cut_point(n: int, r: int, li_upper: float | None, target: float) -> float:
    T = 1.0
    while _integral_tail(n, r, li_upper, T) > target:
        T += 0.25
    return T


def adaptive_simpson(f, a: float, b: float, tol: float, max_depth: int, pieces: int = 16):
    """Integrate ``f(t) -> (value, value_error)`` over [a, b].

    Returns ``(integral, quadrature_estimate, node_error)``: the accepted
    composite Simpson sum, the summed Richardson estimates |S2 - S1| / 15,
    and the Simpson-weighted sum of per-node value errors (weights are
    positive, so that is exactly the propagated node error).
    """
    grid = [a + (b - a) * i / (2 * pieces) for i in range(2 * pieces + 1)]
    vals = [f(t) for t in grid]
    stack = []
    for i in range(pieces):
        ta, tm, tb = grid[2 * i], grid[2 * i + 1], grid[2 * i + 2]
        fa, fm, fb = vals[2 * i], vals[2 * i + 1], vals[2 * i + 2]
        stack.append((ta, tb, fa, fm, fb, (tb - ta) / 6 * (fa[0] + 4 * fm[0] + fb[0]), tol / pieces, 0))
    total = estimate = node_err = 0.0
    while stack:
        ta, tb, fa, fm, fb, whole, ptol, depth = stack.pop()
        tm = (ta + tb) / 2
        fl, fr = f((ta + tm) / 2), f((tm + tb) / 2)
        h = (tb - ta) / 12
        left = h * (fa[0] + 4 * fl[0] + fm[0])
        right = h * (fm[0] + 4 * fr[0] + fb[0])
        diff = abs(left + right - whole) / 15
        if diff <= ptol or depth >= max_depth:
            total += left + right
            estimate += diff
            node_err += h * (fa[1] + 4 * fl[1] + 2 * fm[1] + 4 * fr[1] + fb[1])
        else:
            stack.append((ta, tm, fa, fl, fm, left, ptol / 2, depth + 1))
            stack.append((tm, tb, fm, fr, fb, right, ptol / 2, depth + 1))
    return total, estimate, node_err


def xi_integral(c, n: int, config: NumericConfig = NumericConfig()) -> EvalResult:
    """Quadrature of the defining integral on [0, T], plus a bound for t > T.

    The integrand is rewritten as t^(n-1) e^-t Li_c(z)/z / (n-1)! with
    z = 1 - e^-t, which is smooth at t = 0. Each node's polylog only needs
    accuracy tol / (NODE_SLACK T w(t)) with w(t) = t^(n-1) e^-t / (n-1)!,
    so nodes at large t (z close to 1) get away with short series.
    For k1 = 1 and depth > 1 the achieved bound may exceed the tolerance.
    """
    c = _check(c, n)
    tol = config.tol
    check_tol(tol)
    li_upper = None
    if c.admissible:
        z = zeta_infinite(c, 1e-6, config.max_terms)
        li_upper = z.value + z.error_bound
    li = PolylogSeries(c, li_upper)
    fact = math.factorial(n - 1)
    T = config.t_cut or _cut_point(n, len(c), li_upper, tol / 2)
    # the integral past T lies in [0, tail]
    tail = _integral_tail(n, len(c), li_upper, T)
    # nodes far more accurate than their share keeps the Richardson estimate honest
    node_scale = tol / (NODE_SLACK * T)
    node_terms = min(config.max_terms, NODE_TERMS_CAP)
    evaluated = []

    def integrand(t: float) -> tuple[float, float]:
        w = t ** (n - 1) * math.exp(-t) / fact
        if w == 0.0:
            return 0.0, 0.0
        z = -math.expm1(-t)
        value, err, terms = li.evaluate(z, node_scale / w, node_terms, over_z=True)
        evaluated.append(terms)
        return w * value, w * err + 4 * U * w * value

    quad, estimate, node_err = adaptive_simpson(integrand, 0.0, T, tol / 2, config.quad_max_depth)
    bound = estimate + node_err + tail / 2 + 8 * U * abs(quad)
    return EvalResult(quad + tail / 2, bound, max(evaluated, default=0))


# --- cross checks ------------------------------------------------------------


@dataclass
class Comparison:
    left: str
    right: str
    difference: float
    allowed: float

    @property
    def ok(self) -> bool:
        return self.difference <= self.allowed


@dataclass
class CrossCheck:
    c: Composition
    n: int
    routes: dict = field(default_factory=dict)
    comparisons: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(cmp.ok for cmp in self.comparisons)


def integral_supported(c) -> bool:
    c = as_composition(c)
    return c.admissible or len(c) == 1


def cross_check(c, n: int, config: NumericConfig = NumericConfig(), routes=None) -> CrossCheck:
    """Evaluate every applicable route and compare them pairwise.

    A pair passes when the values differ by at most the sum of their error
    bounds. For depth 1 the closed form zeta*(k+1, {1}^(n-1)) joins in.
    """
    c = _check(c, n)
    wanted = routes or ("series", "stuffle", "integral", "zeta_star")
    report = CrossCheck(c, n)
    if "series" in wanted:
        report.routes["series"] = xi_series(c, n, config)
    if "stuffle" in wanted:
        report.routes["stuffle"] = xi_stuffle_route(c, n, config)
    if "integral" in wanted and integral_supported(c):
        report.routes["integral"] = xi_integral(c, n, config)
    if "zeta_star" in wanted and len(c) == 1:
        report.routes["zeta_star"] = zeta_star_infinite((c[0] + 1,) + (1,) * (n - 1), config.tol, config.max_terms)
    for a, b in itertools.combinations(report.routes, 2):
        ra, rb = report.routes[a], report.routes[b]
        report.comparisons.append(Comparison(a, b, abs(ra.value - rb.value), ra.error_bound + rb.error_bound))
    return report
