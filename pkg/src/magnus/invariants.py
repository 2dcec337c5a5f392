"""Magnus expansion, lower-central-series membership and Milnor invariants."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import LowerDegreeNonvanishing, RankMismatch, TruncationError, WordError
from ..utils.logger import get_logger
from .series import MagnusPolynomial, Monomial
from .words import FreeWord

logger = get_logger(__name__)


class VerdictKind(str, Enum):
    EXACT = "exact"
    AT_LEAST = "at_least"


@dataclass(frozen=True)
class Witness:
    """A nonvanishing invariant mu(indices) = coefficient."""

    indices: Tuple[int, ...]
    coefficient: int

    def name(self) -> str:
        if all(0 < i < 10 for i in self.indices):
            return "mu(" + "".join(str(i) for i in self.indices) + ")"
        return "mu(" + ",".join(str(i) for i in self.indices) + ")"

    def label(self) -> str:
        return f"{self.name()}={self.coefficient}"


@dataclass(frozen=True)
class DegreeVerdict:
    """
    Milnor degree as far as a finite truncation can tell.

    EXACT carries the first nonvanishing invariant as witness (its index
    sequence has length degree + 1). AT_LEAST means every invariant of
    degree below ``degree`` vanishes and nothing further was tested.
    """

    kind: VerdictKind
    degree: int
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        if self.kind is VerdictKind.EXACT and self.witness is not None:
            if len(self.witness.indices) != self.degree + 1:
                raise ValueError(
                    f"witness {self.witness.indices} does not have length {self.degree + 1}"
                )

    @classmethod
    def exact(cls, degree: int, witness: Optional[Witness] = None) -> "DegreeVerdict":
        return cls(VerdictKind.EXACT, degree, witness)

    @classmethod
    def at_least(cls, degree: int) -> "DegreeVerdict":
        return cls(VerdictKind.AT_LEAST, degree)

    @property
    def is_exact(self) -> bool:
        return self.kind is VerdictKind.EXACT

    def combine(self, other: "DegreeVerdict") -> "DegreeVerdict":
        """Degree of a split union: the minimum, with AT_LEAST kept conservative."""
        if self.is_exact and other.is_exact:
            return self if self.degree <= other.degree else other
        if self.is_exact:
            return self if self.degree < other.degree else other
        if other.is_exact:
            return other if other.degree < self.degree else self
        return self if self.degree <= other.degree else other

    def __str__(self) -> str:
        if self.is_exact:
            return f"exact {self.degree}"
        return f">= {self.degree}"


def _check_longitudes(longitudes: Sequence[FreeWord]) -> int:
    if not longitudes:
        raise WordError("a link needs at least one longitude")
    r = len(longitudes)
    for i, word in enumerate(longitudes, start=1):
        if word.rank != r:
            raise RankMismatch(
                f"longitude {i} has rank {word.rank}, expected {r} (one generator per component)"
            )
    return r


def magnus_expand(w: FreeWord, cap: int) -> MagnusPolynomial:
    """
    Image of ``w`` under m_i -> 1 + h_i, truncated above degree ``cap``.

    The product is accumulated one letter at a time: right multiplication
    by 1 + h_i appends i to every short monomial, and by
    (1 + h_i)^-1 = 1 - h_i + h_i^2 - ... appends runs of i with
    alternating signs.
    """
    if cap < 1:
        raise TruncationError(f"cap must be >= 1, got {cap}")

    terms: Dict[Monomial, int] = {(): 1}
    for gen, exp in w.letters:
        snapshot = list(terms.items())
        for mono, coeff in snapshot:
            room = cap - len(mono)
            if room <= 0:
                continue
            if exp == 1:
                key = mono + (gen,)
                terms[key] = terms.get(key, 0) + coeff
            else:
                sign = -1
                key = mono
                for _ in range(room):
                    key = key + (gen,)
                    terms[key] = terms.get(key, 0) + sign * coeff
                    sign = -sign
        terms = {m: c for m, c in terms.items() if c}

    return MagnusPolynomial(w.rank, cap, terms)


def lcs_member(w: FreeWord, k: int) -> bool:
    """True iff ``w`` lies in the k-th lower central subgroup F_k."""
    if k < 1:
        raise TruncationError(f"lower central index must be >= 1, got {k}")
    if k == 1 or w.is_identity():
        return True
    return magnus_expand(w, k - 1).is_one()


def link_degree(longitudes: Sequence[FreeWord], cap: int) -> DegreeVerdict:
    """
    Milnor degree of a link given by its longitude words.

    Expands every longitude to degree ``cap - 1``. The lowest nonconstant
    degree k found gives EXACT(k); the witness is the first nonzero
    coefficient scanning longitudes in order and degree-k monomials
    lexicographically. If none is found the verdict is AT_LEAST(cap).

    Args:
        longitudes: One Milnor word per component, all of rank len(longitudes).
        cap: Truncation cap, >= 2.

    Raises:
        TruncationError: cap < 2.
        RankMismatch: A longitude has the wrong rank.
    """
    if cap < 2:
        raise TruncationError(f"link_degree needs cap >= 2, got {cap}")
    _check_longitudes(longitudes)

    expansions: List[MagnusPolynomial] = [magnus_expand(w, cap - 1) for w in longitudes]
    lowest = [e.lowest_degree() for e in expansions]
    found = [d for d in lowest if d is not None]
    if not found:
        logger.debug(f"all invariants of degree < {cap} vanish")
        return DegreeVerdict.at_least(cap)

    k = min(found)
    for i, expansion in enumerate(expansions, start=1):
        if lowest[i - 1] != k:
            continue
        for mono, coeff in expansion.homogeneous(k).items():
            witness = Witness(mono + (i,), coeff)
            logger.debug(f"first nonvanishing invariant {witness.label()}")
            return DegreeVerdict.exact(k, witness)

    raise AssertionError("lowest degree found without a witness")  # unreachable


def mu_bar(
    longitudes: Sequence[FreeWord],
    indices: Sequence[int],
    strict: bool = True,
) -> int:
    """
    mu(i_1 ... i_k i): coefficient of h_{i_1}...h_{i_k} in e(longitude i).

    In strict mode every invariant of lower degree must vanish, otherwise
    LowerDegreeNonvanishing is raised with the offending witness.
    """
    r = _check_longitudes(longitudes)
    indices = tuple(indices)
    if len(indices) < 2:
        raise WordError(f"an invariant needs at least two indices, got {indices}")
    for i in indices:
        if not 1 <= i <= r:
            raise WordError(f"index {i} out of range 1..{r}")

    k = len(indices) - 1
    if strict and k >= 2:
        verdict = link_degree(longitudes, k)
        if verdict.is_exact:
            raise LowerDegreeNonvanishing(
                verdict.degree, verdict.witness.indices, verdict.witness.coefficient
            )

    expansion = magnus_expand(longitudes[indices[-1] - 1], k)
    return expansion.coefficient(indices[:-1])


def linking_number(longitudes: Sequence[FreeWord], i: int, j: int) -> int:
    """Degree-one invariant mu(j i): exponent sum of m_j in longitude i."""
    return mu_bar(longitudes, (j, i), strict=False)
