"""Witt numbers, Milnor numbers and the Milnor sets of free abelian homology."""

from typing import FrozenSet, List

from sympy import divisors, factorint

from ..errors import MilnorError


def mobius(d: int) -> int:
    if d < 1:
        raise MilnorError(f"mobius needs a positive integer, got {d}")
    exponents = factorint(d).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def _necklace_sum(r: int, k: int) -> int:
    return sum(mobius(d) * r ** (k // d) for d in divisors(k))


def witt(r: int, k: int) -> int:
    """
    N_k^r: number of basic commutators of length k in r generators.

    Raises:
        ArithmeticError: The necklace sum is not divisible by k.
    """
    if r < 1 or k < 1:
        raise MilnorError(f"witt needs r, k >= 1, got ({r}, {k})")
    total = _necklace_sum(r, k)
    if total % k:
        raise ArithmeticError(f"necklace sum {total} for (r={r}, k={k}) is not divisible by {k}")
    return total // k


def milnor_number(r: int, k: int) -> int:
    """M_k^r = r N_k^r - N_{k+1}^r independent degree-k invariants."""
    if r < 2 or k < 2:
        raise MilnorError(f"milnor_number needs r, k >= 2, got ({r}, {k})")
    return r * witt(r, k) - witt(r, k + 1)


def p_sum(r: int, k: int) -> int:
    """Sum of r^(k/p) over the distinct primes p dividing k."""
    if r < 2 or k < 2:
        raise MilnorError(f"p_sum needs r, k >= 2, got ({r}, {k})")
    return sum(r ** (k // p) for p in factorint(k))


def alternating_terms(r: int, k: int) -> List[int]:
    """
    n_0, ..., n_w with k N_k^r = n_0 - n_1 + ... +- n_w, where n_s sums
    r^(k/d) over squarefree divisors d of k with s prime factors.
    """
    if r < 1 or k < 1:
        raise MilnorError(f"alternating_terms needs r, k >= 1, got ({r}, {k})")
    primes = len(factorint(k))
    terms = [0] * (primes + 1)
    for d in divisors(k):
        if mobius(d) == 0:
            continue
        terms[len(factorint(d))] += r ** (k // d)
    return terms


def free_milnor_set(r: int, limit: int) -> FrozenSet[int]:
    """
    Finite Milnor degrees up to ``limit`` of 3-manifolds with H_1 = Z^r:
    the k >= 2 with M_k^r > 0 (empty for r <= 1).
    """
    if r <= 1:
        return frozenset()
    return frozenset(k for k in range(2, limit + 1) if milnor_number(r, k) > 0)
