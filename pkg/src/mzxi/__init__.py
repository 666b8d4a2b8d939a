"""Multiple zeta values, finite stuffle products and xi_{k1..kr}(n)."""

from .core import BigRational, Composition, EvalResult, NumericConfig, compositions_of, depth, is_admissible, weight
from .finite_mzv import (
    alternating_binomial_sum,
    reduce_upper,
    star_to_ordinary,
    zeta_finite,
    zeta_finite_table,
    zeta_star_finite,
)
from .numeric import polylog, zeta_infinite, zeta_star_infinite
from .stuffle import StuffleExpansion, stuffle_product, verify_stuffle
from .xi import cross_check, xi_integral, xi_series, xi_stuffle_route

__all__ = [
    "BigRational",
    "Composition",
    "EvalResult",
    "NumericConfig",
    "StuffleExpansion",
    "alternating_binomial_sum",
    "compositions_of",
    "cross_check",
    "depth",
    "is_admissible",
    "polylog",
    "reduce_upper",
    "star_to_ordinary",
    "stuffle_product",
    "verify_stuffle",
    "weight",
    "xi_integral",
    "xi_series",
    "xi_stuffle_route",
    "zeta_finite",
    "zeta_finite_table",
    "zeta_infinite",
    "zeta_star_finite",
    "zeta_star_infinite",
]
