"""Exact finite multiple zeta values and their elementary identities.

All values are :class:`fractions.Fraction`. The evaluator runs the recurrence
over the first summation index,

    Z_N(k1, ..., kr) = sum_{n=1}^{N} n^-k1 * Z_{n-1}(k2, ..., kr)

(with ``Z_n`` in place of ``Z_{n-1}`` for the non-strict star sums), so one
call produces the whole table ``n = 0..N`` in O(N r) rational operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import Composition, as_composition


def zeta_finite_table(N: int, c, star: bool = False) -> list[Fraction]:
    """Values ``Z_n(c)`` for ``n = 0..N``; strict sums unless ``star``."""
    if N < 0:
        raise ValueError("upper limit N must be >= 0")
    c = as_composition(c)
    level = [Fraction(1)] * (N + 1)
    for k in reversed(c):
        new = [Fraction(0)] * (N + 1)
        acc = Fraction(0)
        for n in range(1, N + 1):
            below = level[n] if star else level[n - 1]
            if below:
                acc += below / n**k
            new[n] = acc
        level = new
    return level


def zeta_finite(N: int, c) -> Fraction:
    """Z_N(c) = sum over N >= n1 > n2 > ... > nr >= 1 of prod n_i^-k_i."""
    return zeta_finite_table(N, c)[N]


def zeta_star_finite(N: int, c) -> Fraction:
    """Z*_N(c), the same sum over N >= n1 >= n2 >= ... >= nr >= 1."""
    return zeta_finite_table(N, c, star=True)[N]


def star_to_ordinary(c) -> list[Composition]:
    """Every way of deleting commas from ``c``, merging neighbours by addition.

    Listed by depth, then by the positions of the commas kept. Patterns that
    happen to produce equal compositions are listed separately.
    """
    c = as_composition(c)
    if not c:
        raise ValueError("star_to_ordinary needs a nonempty composition")
    r = len(c)
    out = []
    for h in range(1, r + 1):
        for cuts in combinations(range(1, r), h - 1):
            bounds = (0,) + cuts + (r,)
            out.append(Composition(sum(c[a:b]) for a, b in zip(bounds, bounds[1:])))
    return out


@dataclass(frozen=True)
class Reduction:
    """Data of Z_N(c) = Z_{N-1}(c) + N^-a1 * Z_{N-1}(tail)."""

    N: int
    kept: Composition
    tail: Composition
    exponent: int

    def sides(self) -> tuple[Fraction, Fraction]:
        lhs = zeta_finite(self.N, self.kept)
        rhs = zeta_finite(self.N - 1, self.kept) + zeta_finite(self.N - 1, self.tail) / self.N**self.exponent
        return lhs, rhs

    def holds(self) -> bool:
        lhs, rhs = self.sides()
        return lhs == rhs


def reduce_upper(N: int, c) -> Reduction:
    c = as_composition(c)
    if not c:
        raise ValueError("reduce_upper needs a nonempty composition")
    if N < 1:
        raise ValueError("reduce_upper needs N >= 1")
    return Reduction(N, c, c.tail, c[0])


def alternating_binomial_sum(n: int, r: int) -> Fraction:
    """sum_{l=1}^{n} C(n, l) (-1)^(l-1) / l^r, straight from binomial coefficients."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    total = Fraction(0)
    for ell in range(1, n + 1):
        term = Fraction(comb(n, ell), ell**r)
        total += term if ell % 2 else -term
    return total
