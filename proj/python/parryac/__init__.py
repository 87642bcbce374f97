"""Abelian complexity of the fixed points of quadratic Parry morphisms."""

from ._core import (
    Error,
    Family,
    InstabilityError,
    Morphism,
    UnsupportedConstruction,
    ac,
    ac_result,
    ac_via_prefix_counts,
    balance_bound,
    fixed_point_prefix,
    max_ac,
    normal_u_rep,
    oracle_ac,
    parikh_set,
    prefix_b_count,
    prefix_decomposition,
    u_value,
    word_prefix,
)

__all__ = [
    "Error",
    "Family",
    "InstabilityError",
    "Morphism",
    "UnsupportedConstruction",
    "ac",
    "ac_result",
    "ac_via_prefix_counts",
    "balance_bound",
    "fixed_point_prefix",
    "max_ac",
    "normal_u_rep",
    "oracle_ac",
    "parikh_set",
    "prefix_b_count",
    "prefix_decomposition",
    "u_value",
    "word_prefix",
]
