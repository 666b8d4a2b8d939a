"""Index compositions, exact rationals and the shared numeric result types."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

BigRational = Fraction

# Smallest absolute tolerance the double-precision evaluators accept.
MIN_TOL = 1e-13


class Composition(tuple):
    """An ordered tuple of positive integers ``(k1, ..., kr)``.

    The empty composition is allowed and has depth and weight zero.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int) or p < 1:
                raise ValueError(f"composition parts must be positive integers, got {p!r}")
        return super().__new__(cls, parts)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def admissible(self) -> bool:
        return len(self) >= 1 and self[0] >= 2

    @property
    def head(self) -> int:
        if not self:
            raise ValueError("empty composition has no first part")
        return self[0]

    @property
    def tail(self) -> "Composition":
        return Composition(self[1:])

    def prepend(self, part: int) -> "Composition":
        return Composition((part,) + tuple(self))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse ``"2,1,1"``; the empty (or blank) string is the empty composition."""
        text = text.strip()
        if not text:
            return cls()
        parts = []
        for token in text.split(","):
            tok = token.strip()
            if not tok.isdigit() or int(tok) < 1:
                raise ValueError(f"invalid composition part {token!r}")
            parts.append(int(tok))
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


def as_composition(c) -> Composition:
    if isinstance(c, Composition):
        return c
    if isinstance(c, str):
        return Composition.parse(c)
    return Composition(c)


def weight(c) -> int:
    return as_composition(c).weight


def depth(c) -> int:
    return as_composition(c).depth


def is_admissible(c) -> bool:
    return as_composition(c).admissible


def compositions_of(m: int, h: int) -> list[Composition]:
    """All compositions of ``m`` into exactly ``h`` positive parts, lexicographically.

    Each composition corresponds to cut points ``1 <= l1 < ... < l_{h-1} < m``
    and has parts ``(l1, l2 - l1, ..., m - l_{h-1})``. ``m = 0`` yields nothing.
    """
    if m < 1 or h < 1 or h > m:
        return []
    out = []
    for cuts in itertools.combinations(range(1, m), h - 1):
        bounds = (0,) + cuts + (m,)
        out.append(Composition(b - a for a, b in zip(bounds, bounds[1:])))
    return out


@dataclass(frozen=True)
class EvalResult:
    """A floating value together with an absolute error bound."""

    value: float
    error_bound: float
    terms: int = 0

    def __post_init__(self):
        if not (self.error_bound >= 0.0) or not math.isfinite(self.error_bound):
            raise ValueError(f"error bound must be finite and >= 0, got {self.error_bound}")

    @property
    def lower(self) -> float:
        return self.value - self.error_bound

    @property
    def upper(self) -> float:
        return self.value + self.error_bound

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper

    def __add__(self, other: "EvalResult") -> "EvalResult":
        return EvalResult(self.value + other.value, self.error_bound + other.error_bound,
                          self.terms + other.terms)

    def scaled(self, factor: float) -> "EvalResult":
        return EvalResult(self.value * factor, self.error_bound * abs(factor), self.terms)


@dataclass(frozen=True)
class NumericConfig:
    """Limits shared by the numeric evaluators.

    ``t_cut`` is the upper end of the integration range for the integral
    route; when ``None`` it is derived from ``tol``.
    """

    tol: float = 1e-6
    max_terms: int = 10**8
    quad_max_depth: int = 50
    t_cut: Optional[float] = None

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if self.quad_max_depth < 1:
            raise ValueError("quad_max_depth must be >= 1")
        if self.t_cut is not None and not self.t_cut > 0:
            raise ValueError("t_cut must be positive")

    def with_tol(self, tol: float) -> "NumericConfig":
        return NumericConfig(tol, self.max_terms, self.quad_max_depth, self.t_cut)


def check_tol(tol: float) -> None:
    if not tol > 0:
        raise ValueError("tol must be positive")
    if tol < MIN_TOL:
        raise ValueError(f"tolerance {tol:g} is below the attainable {MIN_TOL:g} in double precision")
