"""Split unions, relabelling and the Milnor degree of zero surgery."""

from typing import Optional, Sequence

from ..errors import MilnorError, SurgeryHypothesisError
from ..magnus.invariants import DegreeVerdict
from ..magnus.words import FreeWord
from .models import FramedLink, LongitudeLink


def unlink(r: int) -> LongitudeLink:
    """r-component unlink: every longitude is trivial."""
    if r < 1:
        raise MilnorError(f"component count must be positive, got {r}")
    return LongitudeLink(tuple(FreeWord.identity(r) for _ in range(r)))


def _min_valid_to(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def split_union(a: LongitudeLink, b: LongitudeLink) -> LongitudeLink:
    """A followed by B, with B's components renumbered after A's."""
    rank = a.components + b.components
    longitudes = tuple(w.embed(rank) for w in a.longitudes) + tuple(
        w.embed(rank, offset=a.components) for w in b.longitudes
    )
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = a.labels + b.labels
    return LongitudeLink(longitudes, valid_to=_min_valid_to(a.valid_to, b.valid_to), labels=labels)


def relabel(link: LongitudeLink, permutation: Sequence[int]) -> LongitudeLink:
    """Component i becomes component permutation[i-1]."""
    r = link.components
    permutation = list(permutation)
    if sorted(permutation) != list(range(1, r + 1)):
        raise MilnorError(f"not a permutation of 1..{r}: {permutation}")
    longitudes = [None] * r
    labels = [None] * r if link.labels is not None else None
    for i, word in enumerate(link.longitudes, start=1):
        longitudes[permutation[i - 1] - 1] = word.relabel(permutation)
        if labels is not None:
            labels[permutation[i - 1] - 1] = link.labels[i - 1]
    return LongitudeLink(
        tuple(longitudes),
        valid_to=link.valid_to,
        labels=None if labels is None else tuple(labels),
    )


def zero_surgery_degree(framed: FramedLink, cap: int) -> DegreeVerdict:
    """
    Milnor degree of zero surgery on a diagonal link, which equals the
    link's own degree.

    Raises:
        SurgeryHypothesisError: A linking number or a framing is nonzero.
    """
    if not framed.is_diagonal():
        raise SurgeryHypothesisError(
            "diagonal", f"nonzero linking numbers in\n{framed.linking_matrix()}"
        )
    for i, framing in enumerate(framed.framings, start=1):
        if framing:
            raise SurgeryHypothesisError("zero framing", f"component {i} has framing {framing}")
    return framed.link.degree(cap)
