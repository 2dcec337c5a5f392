"""Truncated noncommutative power series over the integers."""

from dataclasses import dataclass, field
from typing import Dict, Iterator, Mapping, Optional, Tuple

from ..errors import TruncationError, WordError

Monomial = Tuple[int, ...]  # h_{i_1} ... h_{i_k} as (i_1, ..., i_k); () is the unit


@dataclass(frozen=True)
class MagnusPolynomial:
    """
    Element of Z<<h_1, ..., h_rank>> truncated above total degree ``cap``.

    ``terms`` maps monomials to nonzero Python ints (arbitrary precision).
    Iteration is in lexicographic monomial order.
    """

    rank: int
    cap: int
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.rank < 1:
            raise WordError(f"rank must be positive, got {self.rank}")
        if self.cap < 1:
            raise TruncationError(f"cap must be >= 1, got {self.cap}")
        cleaned: Dict[Monomial, int] = {}
        for mono, coeff in self.terms.items():
            mono = tuple(mono)
            if len(mono) > self.cap or coeff == 0:
                continue
            if any(not 1 <= i <= self.rank for i in mono):
                raise WordError(f"monomial {mono} uses a variable outside 1..{self.rank}")
            cleaned[mono] = int(coeff)
        object.__setattr__(self, "terms", dict(sorted(cleaned.items())))

    @classmethod
    def one(cls, rank: int, cap: int) -> "MagnusPolynomial":
        return cls(rank, cap, {(): 1})

    @classmethod
    def variable(cls, rank: int, cap: int, index: int) -> "MagnusPolynomial":
        return cls(rank, cap, {(index,): 1})

    def _check(self, other: "MagnusPolynomial") -> int:
        if other.rank != self.rank:
            raise WordError(f"rank mismatch: {self.rank} vs {other.rank}")
        return min(self.cap, other.cap)

    def __add__(self, other: "MagnusPolynomial") -> "MagnusPolynomial":
        cap = self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return MagnusPolynomial(self.rank, cap, out)

    def __neg__(self) -> "MagnusPolynomial":
        return MagnusPolynomial(self.rank, self.cap, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MagnusPolynomial") -> "MagnusPolynomial":
        return self + (-other)

    def __mul__(self, other: "MagnusPolynomial") -> "MagnusPolynomial":
        cap = self._check(other)
        out: Dict[Monomial, int] = {}
        right = list(other.terms.items())
        for m1, c1 in self.terms.items():
            room = cap - len(m1)
            if room < 0:
                continue
            for m2, c2 in right:
                if len(m2) > room:
                    continue
                key = m1 + m2
                out[key] = out.get(key, 0) + c1 * c2
        return MagnusPolynomial(self.rank, cap, out)

    def coefficient(self, monomial: Monomial) -> int:
        return self.terms.get(tuple(monomial), 0)

    def homogeneous(self, degree: int) -> Dict[Monomial, int]:
        """Degree-``degree`` part, in lexicographic order."""
        return {m: c for m, c in self.terms.items() if len(m) == degree}

    def lowest_degree(self) -> Optional[int]:
        """Smallest degree of a nonconstant term, or None if self is a constant."""
        degrees = [len(m) for m in self.terms if m]
        return min(degrees) if degrees else None

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def truncate(self, cap: int) -> "MagnusPolynomial":
        if cap > self.cap:
            raise TruncationError(f"cannot raise cap from {self.cap} to {cap}")
        return MagnusPolynomial(self.rank, cap, self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MagnusPolynomial):
            return NotImplemented
        return (self.rank, self.cap, self.terms) == (other.rank, other.cap, other.terms)

    def __hash__(self) -> int:
        return hash((self.rank, self.cap, tuple(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.terms.items():
            body = "".join(f"h{i}" for i in mono)
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}{body}")
        return " + ".join(parts).replace("+ -", "- ")
