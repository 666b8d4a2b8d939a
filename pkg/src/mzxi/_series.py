"""Vectorised nested harmonic sums and closed-form tail integrals.

Shared by the numeric evaluators. Nested sums run in chunks; partial sums
are carried in ``numpy.longdouble`` so the accumulated rounding stays far
below the double-precision tolerances the evaluators promise.
"""

from __future__ import annotations

import math
from math import comb, factorial

import numpy as np

U = 2.0**-53
U_ACC = float(np.finfo(np.longdouble).epsneg)
CHUNK = 1 << 15


def gamma(k: int, u: float = U) -> float:
    """Higham's gamma_k = k u / (1 - k u)."""
    return k * u / (1.0 - k * u)


class NestedSums:
    """Running values ``Z_n(parts[j:])`` for every suffix ``j``.

    Strict sums use ``n1 > n2 > ...``; ``star=True`` uses ``>=``. ``advance``
    yields, per chunk of indices ``m``, the arrays ``cur[j] = Z_m(parts[j:])``
    and ``prev[j] = Z_{m-1}(parts[j:])`` (``cur[r] = prev[r] = 1``).
    """

    def __init__(self, parts, star: bool = False, chunk: int = CHUNK):
        self.parts = tuple(int(p) for p in parts)
        self.star = star
        self.chunk = chunk
        self.n = 0
        self.chunks = 0
        r = len(self.parts)
        self._last = [np.longdouble(0)] * r + [np.longdouble(1)]

    @property
    def depth(self) -> int:
        return len(self.parts)

    def advance(self, stop: int):
        r = self.depth
        while self.n < stop:
            hi = min(stop, self.n + self.chunk)
            m = np.arange(self.n + 1, hi + 1, dtype=np.float64)
            inv = 1.0 / m
            ones = np.ones(len(m), dtype=np.longdouble)
            cur = [None] * r + [ones]
            prev = [None] * r + [ones]
            for j in range(r - 1, -1, -1):
                below = cur[j + 1] if self.star else prev[j + 1]
                inc = below * inv ** self.parts[j]
                acc = np.cumsum(inc, dtype=np.longdouble)
                acc += self._last[j]
                cur[j] = acc
                p = np.empty_like(acc)
                p[0] = self._last[j]
                p[1:] = acc[:-1]
                prev[j] = p
            self._last = [cur[j][-1] for j in range(r)] + [np.longdouble(1)]
            self.n = hi
            self.chunks += 1
            yield m, cur, prev

    def run(self, stop: int) -> "NestedSums":
        for _ in self.advance(stop):
            pass
        return self

    def values(self) -> list[float]:
        """``[Z_n(parts[j:]) for j in 0..r]`` at the current ``n``."""
        return [float(v) for v in self._last]

    def rel_error(self) -> float:
        """Relative error bound valid for every level value (all terms are positive)."""
        steps = self.chunk + self.chunks + 2
        per_level = [(k + 3) * U + gamma(steps, U_ACC) for k in self.parts]
        return sum(per_level) + U


# --- polynomial tail integrals ---------------------------------------------
#
# Polynomials are ascending coefficient lists. For a nonnegative,
# nondecreasing polynomial G on [0, inf) and s > 1:
#
#   if g(n) <= G(ln(n/N)) for all n > N then
#       sum_{n>N} n^-s g(n) <= N^(1-s) * moment(G, s-1, shift=1/N)
#   if g(n) >= G(ln(n/(N+1))) for all n > N then
#       sum_{n>N} n^-s g(n) >= (N+2)^(1-s) * moment(G, s-1)
#
# where moment(G, a, shift) = int_0^inf exp(-a w) G(w + shift) dw.


def poly_mul(p: list[float], q: list[float]) -> list[float]:
    if not p or not q:
        return []
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_add(p: list[float], q: list[float]) -> list[float]:
    out = [0.0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return out


def monomial(coef: float, deg: int) -> list[float]:
    return [0.0] * deg + [coef]


def moment(p: list[float], a: float, shift: float = 0.0) -> float:
    total = 0.0
    for j, cj in enumerate(p):
        if not cj:
            continue
        for i in range(j + 1):
            total += cj * comb(j, i) * shift ** (j - i) * factorial(i) / a ** (i + 1)
    return total


def window_chain_upper(parts, N: int) -> list[float]:
    """Upper polynomial in u = ln(n/N) for a strict chain sum with all indices in (N, n].

    Parts equal to 1 contribute a harmonic window sum <= u and are mutually
    ordered (factor 1/ones!); a part a >= 2 contributes at most N^(1-a)/(a-1).
    """
    ones = sum(1 for p in parts if p == 1)
    coef = 1.0 / factorial(ones)
    for p in parts:
        if p >= 2:
            coef *= N ** (1.0 - p) / (p - 1)
    return monomial(coef, ones)


def log_poly_upper(d: int, M: int) -> list[float]:
    """(1 + ln n)^d / d! as a polynomial in u = ln(n/M)."""
    base = 1.0 + math.log(M)
    return [comb(d, i) * base ** (d - i) / factorial(d) for i in range(d + 1)]


def next_terms(N: int, bound: float, tol: float, history: list, order: float, cap: int) -> int:
    """Pick the next truncation point from the observed decay of the bound."""
    history.append((N, bound))
    if len(history) >= 2:
        (n0, b0), (n1, b1) = history[-2], history[-1]
        if b1 > 0 and b0 > b1 and n1 > n0:
            order = min(max(math.log(b0 / b1) / math.log(n1 / n0), 0.5), order + 1)
    factor = (bound / (0.5 * tol)) ** (1.0 / order) if bound > 0 else 2.0
    factor = min(max(factor * 1.1, 2.0), 64.0)
    return min(cap, int(N * factor) + 1)
