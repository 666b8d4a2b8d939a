"""The stuffle (quasi-shuffle) product of compositions.

Products are multisets: with repeated exponents the same composition can
arise from several interleavings and each one counts, e.g.
``(1) * (1) = 2 (1,1) + (2)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import Composition, as_composition
from .finite_mzv import zeta_finite_table


class StuffleExpansion(Counter):
    """Map from :class:`Composition` to a positive multiplicity."""

    def sorted_terms(self) -> list[tuple[Composition, int]]:
        return sorted(self.items(), key=lambda kv: tuple(kv[0]))

    def records(self) -> list[dict]:
        return [{"parts": list(c), "mult": m} for c, m in self.sorted_terms()]

    def count(self) -> int:
        """Number of terms counted with multiplicity."""
        return sum(self.values())


def stuffle_product(k, h) -> StuffleExpansion:
    k, h = as_composition(k), as_composition(h)

    @lru_cache(maxsize=None)
    def st(i: int, j: int) -> tuple[tuple[tuple[int, ...], int], ...]:
        # stuffle of the suffixes k[i:] and h[j:]
        if i == len(k):
            return ((tuple(h[j:]), 1),)
        if j == len(h):
            return ((tuple(k[i:]), 1),)
        acc: Counter = Counter()
        for head, (ni, nj) in ((k[i], (i + 1, j)), (h[j], (i, j + 1)), (k[i] + h[j], (i + 1, j + 1))):
            for word, mult in st(ni, nj):
                acc[(head,) + word] += mult
        return tuple(acc.items())

    return StuffleExpansion({Composition(w): m for w, m in st(0, 0)})


def delannoy(r: int, s: int) -> int:
    """D(r, s) = D(r-1, s) + D(r, s-1) + D(r-1, s-1), D(r, 0) = D(0, s) = 1."""
    row = [1] * (s + 1)
    for _ in range(r):
        new = [1] * (s + 1)
        for j in range(1, s + 1):
            new[j] = row[j] + new[j - 1] + row[j - 1]
        row = new
    return row[s]


@dataclass(frozen=True)
class StuffleCheck:
    N: int
    left: Composition
    right: Composition
    product: Fraction
    expansion: Fraction

    @property
    def ok(self) -> bool:
        return self.product == self.expansion

    def __bool__(self) -> bool:
        return self.ok

    def report(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return (f"N={self.N} ({self.left})*({self.right}): product={self.product} "
                f"expansion={self.expansion} {status}")


def verify_stuffle(N: int, k, h, table=None, expansion=None) -> StuffleCheck:
    """Check Z_N(k) Z_N(h) = sum mult(f) Z_N(f) exactly.

    ``table`` optionally maps a composition to its list of values for
    ``n = 0..N`` (or more) and ``expansion`` supplies a precomputed
    product, so batch runs can share work.
    """
    k, h = as_composition(k), as_composition(h)

    def z(c):
        if table is None:
            return zeta_finite_table(N, c)[N]
        return table(c)[N]

    lhs = z(k) * z(h)
    if expansion is None:
        expansion = stuffle_product(k, h)
    rhs = sum((m * z(f) for f, m in expansion.sorted_terms()), Fraction(0))
    return StuffleCheck(N, k, h, lhs, rhs)
