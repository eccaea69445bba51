"""Exact character tables and Sylow character correspondences."""

from ._core import (
    Group,
    HypothesisError,
    TheoremViolation,
    builtin_names,
    character_table,
    corpus,
    descent,
    hypotheses,
    mckay_count,
    remark648,
    star,
    table_text,
    verify,
)

__all__ = [
    "Group",
    "HypothesisError",
    "TheoremViolation",
    "builtin_names",
    "character_table",
    "corpus",
    "descent",
    "hypotheses",
    "mckay_count",
    "remark648",
    "star",
    "table_text",
    "verify",
]
