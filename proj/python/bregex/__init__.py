"""Backtracking JavaScript-regex semantics with fuel bounds and logic reductions."""

from ._bregex import (  # noqa: F401
    Regex,
    emit,
    fuel,
    fuel_breakdown,
    lexsat_reduction,
    match_at,
    match_stats,
    minimize_over_choices,
    oracle_lexsat,
    oracle_qbf,
    parse,
    qbf_reduction,
    search,
    solve_lexsat,
    solve_qbf,
    tree,
    validate,
)

__all__ = [
    "Regex",
    "emit",
    "fuel",
    "fuel_breakdown",
    "lexsat_reduction",
    "match_at",
    "match_stats",
    "minimize_over_choices",
    "oracle_lexsat",
    "oracle_qbf",
    "parse",
    "qbf_reduction",
    "search",
    "solve_lexsat",
    "solve_qbf",
    "tree",
    "validate",
]
