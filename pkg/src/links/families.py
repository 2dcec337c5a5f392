"""Longitude data for two further families of links of known Milnor degree."""

from typing import List

from ..errors import MilnorError
from ..magnus.words import FreeWord, commutator
from .models import LongitudeLink
from .surgery import split_union, unlink


def _iterated(rank: int, outer: int, inner: int, depth: int) -> List[FreeWord]:
    """[m_outer, [m_outer, ... [m_outer, m_inner]]] for nesting 0..depth."""
    m = FreeWord.generator(rank, outer)
    out = [FreeWord.generator(rank, inner)]
    for _ in range(depth):
        out.append(commutator(m, out[-1]))
    return out


def milnor_two_component(d: int) -> LongitudeLink:
    """
    Two-component link of odd degree d >= 3.

    Its first nonvanishing invariant is mu(1...1 2 2) with d-1 ones.
    """
    if d < 3 or d % 2 == 0:
        raise MilnorError(f"the two-component family needs odd d >= 3, got {d}")
    half = (d - 1) // 2
    y = _iterated(2, outer=1, inner=2, depth=d - 1)

    first = FreeWord.identity(2)
    for j in range(half):
        factor = commutator(y[2 * half - 1 - j], y[j])
        first = first * (factor if j % 2 == 0 else ~factor)
    return LongitudeLink((first, y[d - 1]), valid_to=d + 1)


def realization_link(d: int, r: int = 3) -> LongitudeLink:
    """
    Three-component link L_d of degree d >= 2 with first nonvanishing
    invariant mu(3 2...2 1), split with an unlink when r > 3.
    """
    if d < 2:
        raise MilnorError(f"L_d needs d >= 2, got {d}")
    if r < 3:
        raise MilnorError(f"L_d has three components, cannot fit in {r}")
    z = _iterated(3, outer=2, inner=3, depth=d - 1)
    w = _iterated(3, outer=2, inner=1, depth=d - 1)

    second = FreeWord.identity(3)
    for j in range(d - 1):
        # sign (-1)^(j+1): even j contributes [Z, W], odd j [W, Z]
        if j % 2 == 0:
            second = second * commutator(z[d - 2 - j], w[j])
        else:
            second = second * commutator(w[j], z[d - 2 - j])
    third = w[d - 1] if d % 2 == 1 else ~w[d - 1]

    link = LongitudeLink((z[d - 1], second, third), valid_to=d + 1)
    if r > 3:
        link = split_union(link, unlink(r - 3))
    return link
