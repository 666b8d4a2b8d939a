"""Double-precision multiple polylogarithms and multiple zeta values with error bounds.

Infinite sums are truncated at ``N`` and the remainder is enclosed, not
just bounded: writing every index above ``N`` as a separate block,

    zeta(k1..kr) = sum_{j=0}^{r} T_N(k1..kj) * Z_N(k_{j+1}..kr),

where ``T_N(a1..aj)`` sums over ``n1 > ... > nj > N``. Nested integral
comparison gives, with ``s_i = a1 + ... + ai``,

    (N+j)^(j-s_j) / P  <=  T_N(a1..aj)  <=  N^(j-s_j) / P,   P = prod_i (s_i - i),

so the reported value is the midpoint and the bound is half the width plus
the accumulated rounding.
"""

from __future__ import annotations

import math

import numpy as np

from ._series import (
    U,
    NestedSums,
    gamma,
    log_poly_upper,
    moment,
    next_terms,
)
from .core import EvalResult, as_composition, check_tol
from .finite_mzv import star_to_ordinary

START_TERMS = 1024


def _tail_block(prefix_weight: int, j: int, prod: float, N: int) -> tuple[float, float]:
    """Midpoint and half-width of the enclosure of T_N for a prefix of depth j."""
    up = N ** float(j - prefix_weight) / prod
    gap = -math.expm1(-(prefix_weight - j) * math.log1p(j / N))
    return up * (1.0 - gap / 2.0), up * gap / 2.0


def _zeta_enclosure(parts, N: int, fin: list[float]) -> tuple[float, float]:
    value = fin[0]
    width = 0.0
    s = 0
    prod = 1.0
    for j in range(1, len(parts) + 1):
        s += parts[j - 1]
        prod *= s - j
        mid, half = _tail_block(s, j, prod, N)
        value += fin[j] * mid
        width += fin[j] * half
    return value, width


def zeta_infinite(c, tol: float = 1e-10, max_terms: int = 10**8) -> EvalResult:
    """zeta(k1, ..., kr) for an admissible composition (k1 >= 2)."""
    c = as_composition(c)
    if not c.admissible:
        raise ValueError(f"zeta({c}) diverges: need depth >= 1 and first part >= 2")
    check_tol(tol)
    acc = NestedSums(c)
    N = min(START_TERMS, max_terms)
    history: list = []
    while True:
        acc.run(N)
        value, width = _zeta_enclosure(c, N, acc.values())
        rounding = (acc.rel_error() + 8 * U) * value
        bound = width + rounding
        if bound <= tol or N >= max_terms or rounding > tol:
            return EvalResult(value, bound, N)
        N = next_terms(N, bound, tol, history, float(c[0]), max_terms)


def zeta_star_infinite(c, tol: float = 1e-10, max_terms: int = 10**8) -> EvalResult:
    """zeta*(c) as the sum of zeta over all comma deletions of ``c``."""
    c = as_composition(c)
    if not c.admissible:
        raise ValueError(f"zeta*({c}) diverges: need depth >= 1 and first part >= 2")
    check_tol(tol)
    terms = star_to_ordinary(c)
    each = tol / len(terms)
    total = EvalResult(0.0, 0.0)
    for d in sorted(terms):
        total = total + zeta_infinite(d, each, max_terms)
    return total


class PolylogSeries:
    """Reusable evaluator for Li_c(z) on [0, 1).

    Keeps the coefficients ``a_m = m^-k1 Z_{m-1}(k2..kr)`` so repeated
    evaluations at different ``z`` (quadrature nodes) share one pass.
    """

    def __init__(self, c, upper: float | None = None):
        c = as_composition(c)
        if not c:
            raise ValueError("polylog needs a nonempty composition")
        self.c = c
        self.k1 = c[0]
        self.d = len(c) - 1
        self.closed_form = c == (1,)
        # optional bound Li_c(z) <= upper for all z in [0, 1)
        self.upper = upper
        self._inner = NestedSums(c[1:])
        self._coef = np.zeros(0)

    def _grow(self, M: int) -> None:
        if M <= len(self._coef):
            return
        chunks = [self._coef]
        for m, _cur, prev in self._inner.advance(M):
            chunks.append((prev[0] * (1.0 / m) ** self.k1).astype(np.float64))
        self._coef = np.concatenate(chunks)

    def _coef_rel_error(self) -> float:
        return self._inner.rel_error() + (self.k1 + 4) * U

    def tail_bound(self, M: int, z: float) -> float:
        """Bound on sum_{m>M} a_m z^m; inf when no bound applies."""
        if z == 0.0:
            return 0.0
        k1, d = self.k1, self.d
        lz = math.log(z)
        zpow = math.exp((M + 1) * lz)
        best = math.inf
        L = 1.0 + math.log(M + 1)
        if L * k1 >= d:
            best = zpow / (-math.expm1(lz)) * (M + 1.0) ** -k1 * L**d / math.factorial(d)
        if k1 >= 2:
            poly = zpow * M ** (1.0 - k1) * moment(log_poly_upper(d, M), k1 - 1.0, 1.0 / M)
            best = min(best, poly)
        return best

    def _choose_terms(self, z: float, tol: float, max_terms: int) -> int:
        M = 16
        while M < max_terms and self.tail_bound(M, z) > tol:
            M *= 2
        return min(M, max_terms)

    def evaluate(self, z: float, tol: float, max_terms: int = 10**8, over_z: bool = False):
        """Return ``(value, error_bound, terms)`` for Li_c(z), or Li_c(z)/z if ``over_z``."""
        if not 0.0 <= z < 1.0:
            raise ValueError(f"z must lie in [0, 1), got {z}")
        if self.closed_form:
            if z == 0.0:
                return (1.0 if over_z else 0.0), 0.0, 0
            v = -math.log1p(-z)
            if over_z:
                v /= z
            return v, 4 * U * v, 0
        if z == 0.0:
            a1 = 1.0 if self.d == 0 else 0.0
            return (a1 if over_z else 0.0), 0.0, 1
        M = self._choose_terms(z, tol * z if over_z else tol, max_terms)
        self._grow(M)
        lz = math.log(z)
        powers = np.exp(np.arange(0 if over_z else 1, M + (0 if over_z else 1)) * lz)
        s = float(np.sum(self._coef[:M] * powers))
        tail = self.tail_bound(M, z)
        if over_z:
            tail /= z
        cap = self._cap(z)
        if cap is not None:
            if over_z:
                cap /= z
            tail = min(tail, max(cap - s, 0.0))
        if not math.isfinite(tail):
            raise ArithmeticError(f"no tail bound for Li_{self.c} at z={z} with {M} terms")
        rel = self._coef_rel_error() + (min(M * abs(lz), 745.0) + 4) * U + gamma(160 + M.bit_length())
        return s + tail / 2.0, tail / 2.0 + rel * (s + tail), M

    def _cap(self, z: float) -> float | None:
        # Li_c(z) <= Li_{1,...,1}(z) = (-ln(1-z))^r / r!
        r = self.d + 1
        cap = (-math.log1p(-z)) ** r / math.factorial(r) * (1 + 4 * r * U)
        if self.upper is not None:
            cap = min(cap, self.upper)
        return cap


def polylog(c, z: float, tol: float = 1e-12, max_terms: int = 10**8) -> EvalResult:
    """Li_{k1..kr}(z) = sum_{n1 > ... > nr >= 1} z^n1 / (n1^k1 ... nr^kr), 0 <= z < 1."""
    check_tol(tol)
    series = PolylogSeries(c)
    value, bound, terms = series.evaluate(z, tol, max_terms)
    return EvalResult(value, bound, terms)
