"""Batch checks of the exact identities and of the xi cross-route agreement."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Composition, NumericConfig, compositions_of
from .finite_mzv import alternating_binomial_sum, star_to_ordinary, zeta_finite_table
from .stuffle import stuffle_product, verify_stuffle
from .xi import expansion_partial_exact, cross_check, series_partial_exact

SUITES = ("stuffle", "star", "reduce", "binomial", "xi")


@dataclass(frozen=True)
class CaseResult:
    suite: str
    key: str
    ok: bool
    detail: str = ""


class ZetaTables:
    """Per-run memo of exact tables ``Z_n(c)``, ``n = 0..N``."""

    def __init__(self, N: int):
        self.N = N
        self._strict: dict = {}
        self._star: dict = {}

    def strict(self, c) -> list[Fraction]:
        c = Composition(c)
        if c not in self._strict:
            self._strict[c] = zeta_finite_table(self.N, c)
        return self._strict[c]

    def star(self, c) -> list[Fraction]:
        c = Composition(c)
        if c not in self._star:
            self._star[c] = zeta_finite_table(self.N, c, star=True)
        return self._star[c]


def compositions_up_to(max_weight: int, include_empty: bool = False) -> list[Composition]:
    out = [Composition()] if include_empty else []
    for w in range(1, max_weight + 1):
        for h in range(1, w + 1):
            out.extend(compositions_of(w, h))
    return out


def bounded_compositions(max_depth: int, max_part: int) -> list[Composition]:
    out = []
    for r in range(1, max_depth + 1):
        out.extend(Composition(p) for p in itertools.product(range(1, max_part + 1), repeat=r))
    return out


def stuffle_suite(max_weight: int = 7, max_upper: int = 20):
    """Z_N(k) Z_N(h) = sum mult Z_N(f) for weight(k) + weight(h) <= max_weight, N <= max_upper."""
    tables = ZetaTables(max_upper)
    comps = compositions_up_to(max_weight, include_empty=True)
    for k in comps:
        for h in comps:
            if k.weight + h.weight > max_weight:
                continue
            expansion = stuffle_product(k, h)
            for N in range(max_upper + 1):
                check = verify_stuffle(N, k, h, table=tables.strict, expansion=expansion)
                yield CaseResult("stuffle", f"N={N} k=({k}) h=({h})", check.ok,
                                 "" if check.ok else check.report())


def star_suite(max_depth: int = 5, max_part: int = 3, max_upper: int = 30):
    """Z*_N(c) equals the sum over comma deletions of Z_N, for all N <= max_upper at once."""
    tables = ZetaTables(max_upper)
    for c in bounded_compositions(max_depth, max_part):
        lhs = tables.star(c)
        parts = [tables.strict(d) for d in star_to_ordinary(c)]
        rhs = [sum(col, Fraction(0)) for col in zip(*parts)]
        bad = [N for N in range(max_upper + 1) if lhs[N] != rhs[N]]
        detail = f"first failure N={bad[0]}: {lhs[bad[0]]} != {rhs[bad[0]]}" if bad else ""
        yield CaseResult("star", f"c=({c}) N<={max_upper}", not bad, detail)


def reduce_suite(max_depth: int = 5, max_part: int = 3, max_upper: int = 30):
    """Z_N(c) = Z_{N-1}(c) + N^-k1 Z_{N-1}(tail) for 1 <= N <= max_upper."""
    tables = ZetaTables(max_upper)
    for c in bounded_compositions(max_depth, max_part):
        full, tail = tables.strict(c), tables.strict(c.tail)
        bad = [N for N in range(1, max_upper + 1) if full[N] != full[N - 1] + tail[N - 1] / N ** c[0]]
        detail = f"first failure N={bad[0]}" if bad else ""
        yield CaseResult("reduce", f"c=({c}) N<={max_upper}", not bad, detail)


def binomial_suite(max_n: int = 40, max_r: int = 6):
    """sum_l C(n,l) (-1)^(l-1) / l^r = Z*_n({1}^r)."""
    tables = ZetaTables(max_n)
    for r in range(max_r + 1):
        star = tables.star((1,) * r)
        for n in range(1, max_n + 1):
            lhs = alternating_binomial_sum(n, r)
            ok = lhs == star[n]
            yield CaseResult("binomial", f"n={n} r={r}", ok, "" if ok else f"{lhs} != {star[n]}")


def truncation_suite(comps, ns, max_upper: int = 20):
    """Partial sums of the xi series equal the truncated stuffle expansion exactly."""
    tables = ZetaTables(max_upper)
    for c in map(Composition, comps):
        for n in ns:
            bad = []
            for N in range(1, max_upper + 1):
                lhs = series_partial_exact(c, n, N)
                rhs = expansion_partial_exact(c, n, N, table=tables.strict)
                if lhs != rhs:
                    bad.append((N, lhs, rhs))
            detail = "first failure N={} : {} != {}".format(*bad[0]) if bad else ""
            yield CaseResult("xi-truncation", f"c=({c}) n={n} N<={max_upper}", not bad, detail)


def xi_suite(max_weight: int = 7, max_upper: int = 20, tol: float = 1e-6):
    """Exact truncation identity plus numeric agreement of the series, stuffle and zeta-star routes."""
    comps = compositions_up_to(min(max_weight, 4))
    yield from truncation_suite(comps, (1, 2, 3), max_upper)
    config = NumericConfig(tol=tol)
    for c in comps:
        if c[0] < 2 and len(c) > 1:
            continue
        for n in (1, 2, 3):
            report = cross_check(c, n, config, routes=("series", "stuffle", "zeta_star"))
            detail = "; ".join(f"{cmp.left}-{cmp.right} diff={cmp.difference:.3g} allowed={cmp.allowed:.3g}"
                               for cmp in report.comparisons if not cmp.ok)
            yield CaseResult("xi-routes", f"c=({c}) n={n}", report.ok, detail)


def run_suite(name: str, max_weight: int = 7, max_upper: int = 20) -> list[CaseResult]:
    if name == "stuffle":
        return list(stuffle_suite(max_weight, max_upper))
    if name == "star":
        return list(star_suite(min(5, max_weight), 3, max_upper))
    if name == "reduce":
        return list(reduce_suite(min(5, max_weight), 3, max_upper))
    if name == "binomial":
        return list(binomial_suite())
    if name == "xi":
        return list(xi_suite(max_weight, max_upper))
    if name == "all":
        return [case for suite in SUITES for case in run_suite(suite, max_weight, max_upper)]
    raise ValueError(f"unknown suite {name!r}")
