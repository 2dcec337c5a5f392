"""Words in the free group on meridian generators m_1, ..., m_r."""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from ..errors import WordError

Letter = Tuple[int, int]  # (generator index in 1..rank, exponent +1/-1)


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    """Cancel adjacent inverse pairs (stack-based free reduction)."""
    stack: List[Letter] = []
    for gen, exp in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """
    A freely reduced word in the free group of rank ``rank``.

    Letters are (generator, exponent) pairs with exponent +1 or -1;
    the empty word is the identity. Words are reduced on construction.
    """

    rank: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise WordError(f"rank must be a positive integer, got {self.rank!r}")
        for gen, exp in self.letters:
            if not 1 <= gen <= self.rank:
                raise WordError(f"generator m{gen} out of range 1..{self.rank}")
            if exp not in (1, -1):
                raise WordError(f"exponent must be +1 or -1, got {exp}")
        object.__setattr__(self, "letters", _reduce(self.letters))

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int, exponent: int = 1) -> "FreeWord":
        return cls(rank, ((index, exponent),))

    @classmethod
    def from_signed(cls, rank: int, signed: Sequence[int]) -> "FreeWord":
        """Build from signed indices: 2 means m2, -2 means m2^-1."""
        return cls(rank, tuple((abs(s), 1 if s > 0 else -1) for s in signed))

    # -- group operations ---------------------------------------------------

    def _check_rank(self, other: "FreeWord") -> None:
        if other.rank != self.rank:
            raise WordError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        self._check_rank(other)
        return FreeWord(self.rank, self.letters + other.letters)

    def __invert__(self) -> "FreeWord":
        return FreeWord(self.rank, tuple((g, -e) for g, e in reversed(self.letters)))

    def inverse(self) -> "FreeWord":
        return ~self

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return (~self) ** (-n)
        return FreeWord(self.rank, self.letters * n)

    def commutator(self, other: "FreeWord") -> "FreeWord":
        """[self, other] = self other self^-1 other^-1."""
        return self * other * ~self * ~other

    def conjugate(self, by: "FreeWord") -> "FreeWord":
        """by self by^-1."""
        return by * self * ~by

    def substitute(self, images: Dict[int, "FreeWord"], rank: int) -> "FreeWord":
        """
        Apply the homomorphism sending m_i to images[i] (m_i itself, re-ranked,
        when i is not in ``images``).

        Args:
            images: Generator index -> image word of rank ``rank``.
            rank: Rank of the target free group.
        """
        out: List[Letter] = []
        for gen, exp in self.letters:
            image = images.get(gen)
            if image is None:
                out.append((gen, exp))
                continue
            if image.rank != rank:
                raise WordError(f"image of m{gen} has rank {image.rank}, expected {rank}")
            out.extend(image.letters if exp == 1 else (~image).letters)
        return FreeWord(rank, tuple(out))

    def relabel(self, permutation: Sequence[int]) -> "FreeWord":
        """Rename m_i to m_{permutation[i-1]}."""
        if sorted(permutation) != list(range(1, self.rank + 1)):
            raise WordError(f"not a permutation of 1..{self.rank}: {list(permutation)}")
        return FreeWord(self.rank, tuple((permutation[g - 1], e) for g, e in self.letters))

    def embed(self, rank: int, offset: int = 0) -> "FreeWord":
        """Same word in a free group of larger rank, generators shifted by ``offset``."""
        if rank < self.rank + offset:
            raise WordError(f"cannot embed rank {self.rank} (+{offset}) into rank {rank}")
        return FreeWord(rank, tuple((g + offset, e) for g, e in self.letters))

    # -- inspection ---------------------------------------------------------

    def is_identity(self) -> bool:
        return not self.letters

    def support(self) -> frozenset:
        """Generators occurring in the word."""
        return frozenset(g for g, _ in self.letters)

    def signed(self) -> Tuple[int, ...]:
        return tuple(g * e for g, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"m{g}" if e == 1 else f"m{g}^-1" for g, e in self.letters)


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    return u.commutator(v)
