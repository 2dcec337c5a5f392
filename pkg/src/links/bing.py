"""Bing doubling of the Hopf family H^d."""

from ..errors import BingDoubleError
from ..magnus.words import FreeWord, commutator
from ..utils.logger import get_logger
from .models import LongitudeLink

logger = get_logger(__name__)


def hopf_link() -> LongitudeLink:
    """H = H^1: each longitude is the other component's meridian."""
    return LongitudeLink(
        (FreeWord.generator(2, 2), FreeWord.generator(2, 1)),
        valid_to=2,
    )


def bing_double(link: LongitudeLink, component: int) -> LongitudeLink:
    """
    Replace component K by a clasped pair K1, K2.

    K1 keeps index K, K2 becomes component r+1. Their longitudes are
    [m_K2, w_K] and [m_K1, w_K]; every other longitude has m_K replaced by
    [m_K1, m_K2]. The certified degree goes up by one.

    Raises:
        BingDoubleError: K is out of range or m_K occurs in w_K.
    """
    r = link.components
    if not 1 <= component <= r:
        raise BingDoubleError(f"component {component} out of range 1..{r}")
    w_k = link.longitudes[component - 1]
    if component in w_k.support():
        raise BingDoubleError(
            f"meridian m{component} occurs in its own longitude {w_k}; "
            "doubling is only supported on the Hopf family"
        )

    rank = r + 1
    k1 = FreeWord.generator(rank, component)
    k2 = FreeWord.generator(rank, rank)
    images = {component: commutator(k1, k2)}
    w = w_k.embed(rank)

    longitudes = [
        commutator(k2, w) if i == component else word.embed(rank).substitute(images, rank)
        for i, word in enumerate(link.longitudes, start=1)
    ]
    longitudes.append(commutator(k1, w))

    labels = None
    if link.labels is not None:
        labels = link.labels + (f"{link.labels[component - 1]}'",)

    valid_to = None if link.valid_to is None else link.valid_to + 1
    logger.debug(f"doubled component {component} of a {r}-component link")
    return LongitudeLink(tuple(longitudes), valid_to=valid_to, labels=labels)


def hopf_family(d: int) -> LongitudeLink:
    """H^d: the (d-1)-fold iterated Bing double of the Hopf link, last component doubled."""
    if d < 1:
        raise BingDoubleError(f"d must be positive, got {d}")
    link = hopf_link()
    for _ in range(d - 1):
        link = bing_double(link, link.components)
    return link
