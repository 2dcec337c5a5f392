"""Free-group words, the Magnus expansion and Milnor invariants."""

from .words import FreeWord, commutator
from .series import MagnusPolynomial
from .invariants import (
    DegreeVerdict,
    VerdictKind,
    Witness,
    magnus_expand,
    lcs_member,
    mu_bar,
    link_degree,
    linking_number,
)

__all__ = [
    "FreeWord",
    "commutator",
    "MagnusPolynomial",
    "DegreeVerdict",
    "VerdictKind",
    "Witness",
    "magnus_expand",
    "lcs_member",
    "mu_bar",
    "link_degree",
    "linking_number",
]
