"""Links presented by longitude words, and framed links."""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..errors import MilnorError, RankMismatch
from ..linkforms.matrices import SymIntMatrix, block_decompose, torsion_factors
from ..magnus.invariants import DegreeVerdict, link_degree, linking_number, mu_bar
from ..magnus.words import FreeWord
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class LongitudeLink:
    """
    An r-component link given by one longitude word per component.

    Each word lives in the free group on the meridians m_1..m_r and is a
    Milnor word certified through degree ``valid_to``; None means the
    words are exact (e.g. an unlink) and any cap may be used.
    """

    longitudes: Tuple[FreeWord, ...]
    valid_to: Optional[int] = None
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        longitudes = tuple(self.longitudes)
        if not longitudes:
            raise MilnorError("a link needs at least one component")
        r = len(longitudes)
        for i, word in enumerate(longitudes, start=1):
            if word.rank != r:
                raise RankMismatch(f"longitude {i} has rank {word.rank}, expected {r}")
        if self.valid_to is not None and self.valid_to < 1:
            raise MilnorError(f"valid_to must be positive, got {self.valid_to}")
        if self.labels is not None and len(self.labels) != r:
            raise MilnorError(f"{len(self.labels)} labels for {r} components")
        object.__setattr__(self, "longitudes", longitudes)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def components(self) -> int:
        return len(self.longitudes)

    def degree(self, cap: int) -> DegreeVerdict:
        if self.valid_to is not None and cap > self.valid_to:
            logger.warning(
                f"cap {cap} exceeds the certified degree {self.valid_to} of these longitudes"
            )
        return link_degree(self.longitudes, cap)

    def mu(self, indices: Sequence[int], strict: bool = True) -> int:
        return mu_bar(self.longitudes, indices, strict=strict)

    def linking_number(self, i: int, j: int) -> int:
        return linking_number(self.longitudes, i, j)


@dataclass(frozen=True)
class FramedLink:
    """A longitude link with an integer framing on each component."""

    link: LongitudeLink
    framings: Tuple[int, ...]

    def __post_init__(self):
        framings = tuple(int(f) for f in self.framings)
        if len(framings) != self.link.components:
            raise MilnorError(
                f"{len(framings)} framings for {self.link.components} components"
            )
        object.__setattr__(self, "framings", framings)

    def is_diagonal(self) -> bool:
        """All pairwise linking numbers vanish."""
        r = self.link.components
        return all(
            self.link.linking_number(i, j) == 0
            for i in range(1, r + 1)
            for j in range(1, r + 1)
            if i != j
        )

    def zero_sublink_count(self) -> int:
        return sum(1 for f in self.framings if f == 0)

    def linking_matrix(self) -> SymIntMatrix:
        """Framings on the diagonal, linking numbers off it."""
        r = self.link.components
        rows = [
            [self.framings[i - 1] if i == j else self.link.linking_number(i, j)
             for j in range(1, r + 1)]
            for i in range(1, r + 1)
        ]
        return SymIntMatrix(tuple(tuple(row) for row in rows))

    def first_homology(self) -> Tuple[int, Tuple[int, ...]]:
        """H_1 of the surgered manifold as (Betti number, torsion invariant factors)."""
        nullity, core, _ = block_decompose(self.linking_matrix())
        torsion = torsion_factors(core.entries) if core.size else ()
        return nullity, torsion
