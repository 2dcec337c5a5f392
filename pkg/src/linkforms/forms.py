"""Linking forms on cyclic groups and their orthogonal splittings."""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import FrozenSet, Sequence, Tuple

from sympy import mod_inverse

from ..errors import FormError


@lru_cache(maxsize=4096)
def _unit_squares(n: int) -> FrozenSet[int]:
    return frozenset(k * k % n for k in range(1, n + 1) if gcd(k, n) == 1)


def orbit(q: int, n: int, signed: bool = False) -> FrozenSet[int]:
    """
    Residues k^2 q mod n for k coprime to n; with ``signed``, also -k^2 q.
    """
    if n == 1:
        return frozenset({0})
    squares = _unit_squares(n)
    out = {s * q % n for s in squares}
    if signed:
        out |= {-s * q % n for s in squares}
    return frozenset(out)


@dataclass(frozen=True)
class CyclicForm:
    """
    The linking form (q/n) on Z_n: self-linking q/n on a generator.

    q is stored as its least nonnegative residue; (0/1) is the trivial form.
    """

    q: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise FormError(f"order must be positive, got {self.n}")
        q = self.q % self.n
        if gcd(q, self.n) != 1:
            raise FormError(f"q={self.q} is not prime to n={self.n}")
        object.__setattr__(self, "q", q)

    @classmethod
    def trivial(cls) -> "CyclicForm":
        return cls(0, 1)

    def is_trivial(self) -> bool:
        return self.n == 1

    def canonical(self) -> "CyclicForm":
        """Least representative of the isomorphism class."""
        return CyclicForm(min(orbit(self.q, self.n)), self.n)

    def table_representative(self) -> int:
        """
        Least of q, -q, q^-1, -q^-1 mod n: one value per lens space L(n, q)
        up to orientation. Finer than the +-k^2 orbit.
        """
        if self.n == 1:
            return 0
        inv = int(mod_inverse(self.q, self.n))
        return min(self.q, -self.q % self.n, inv, -inv % self.n)

    def __neg__(self) -> "CyclicForm":
        return CyclicForm(-self.q, self.n)

    def __str__(self) -> str:
        return f"({self.q}/{self.n})"


@dataclass(frozen=True)
class FormSum:
    """Orthogonal sum of cyclic forms of pairwise coprime orders."""

    summands: Tuple[CyclicForm, ...]

    def __post_init__(self):
        summands = tuple(self.summands)
        if not summands:
            raise FormError("a form sum needs at least one summand")
        _check_coprime([f.n for f in summands])
        object.__setattr__(self, "summands", summands)

    @property
    def order(self) -> int:
        return prod(f.n for f in self.summands)

    def __str__(self) -> str:
        return " + ".join(str(f) for f in self.summands)


def _check_coprime(orders: Sequence[int]) -> None:
    for i, a in enumerate(orders):
        if a < 1:
            raise FormError(f"orders must be positive, got {a}")
        for b in orders[i + 1:]:
            if gcd(a, b) != 1:
                raise FormError(f"orders {a} and {b} are not relatively prime")


def form_isomorphic(a: CyclicForm, b: CyclicForm) -> bool:
    """(q/n) ~ (q'/n) iff q' = k^2 q mod n for some unit k."""
    return a.n == b.n and b.q in orbit(a.q, a.n)


def form_sum(fs: FormSum) -> CyclicForm:
    """Single cyclic form isomorphic to the orthogonal sum: q/n = sum r_i/n_i."""
    n = fs.order
    q = sum(f.q * (n // f.n) for f in fs.summands) % n
    return CyclicForm(q, n).canonical()


def form_split(f: CyclicForm, orders: Sequence[int]) -> FormSum:
    """
    Orthogonal splitting of (q/n) along a coprime factorization of n.

    Summand i is (r_i/n_i) with r_i = q s_i mod n_i, s_i the inverse of
    n/n_i mod n_i.
    """
    orders = [int(o) for o in orders]
    _check_coprime(orders)
    if prod(orders) != f.n:
        raise FormError(f"orders {orders} do not multiply to {f.n}")

    summands = []
    for n_i in orders:
        if n_i == 1:
            summands.append(CyclicForm.trivial())
            continue
        s_i = mod_inverse(f.n // n_i, n_i)
        summands.append(CyclicForm(f.q * s_i % n_i, n_i))
    return FormSum(tuple(summands))
