"""Witt and Milnor numbers and the inequalities relating them."""

from .witt import alternating_terms, free_milnor_set, milnor_number, mobius, p_sum, witt
from .bounds import (
    EXCEPTIONAL_PAIRS,
    LemmaBReport,
    MilnorGridReport,
    StarBoundsReport,
    verify_lemma_b,
    verify_milnor_grid,
    verify_star_bounds,
)

__all__ = [
    "alternating_terms",
    "free_milnor_set",
    "milnor_number",
    "mobius",
    "p_sum",
    "witt",
    "EXCEPTIONAL_PAIRS",
    "LemmaBReport",
    "MilnorGridReport",
    "StarBoundsReport",
    "verify_lemma_b",
    "verify_milnor_grid",
    "verify_star_bounds",
]
