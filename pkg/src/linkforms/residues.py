"""Plus-or-minus quadratic residue symbol and q-quadratic divisors."""

from functools import lru_cache
from math import gcd
from typing import Tuple

from sympy import factorint, legendre_symbol

from ..errors import FormError


@lru_cache(maxsize=8192)
def prime_factorization(n: int) -> Tuple[Tuple[int, int], ...]:
    """(p, e) pairs of n in increasing p, cached per n."""
    return tuple(sorted(factorint(n).items()))


@lru_cache(maxsize=8192)
def _odd_primes(n: int) -> Tuple[int, ...]:
    return tuple(p for p, _ in prime_factorization(n) if p != 2)


def pm_qr_symbol(q: int, n: int) -> int:
    """
    +1 if q is plus or minus a quadratic residue mod n, else -1.

    Decided prime by prime: a single sign e must satisfy e q = 1 mod
    gcd(8, n) and (e q | p) = 1 for every odd prime p dividing n.

    Raises:
        FormError: n < 1 or gcd(q, n) != 1.
    """
    if n < 1:
        raise FormError(f"modulus must be positive, got {n}")
    if gcd(q, n) != 1:
        raise FormError(f"q={q} is not prime to n={n}")
    if n == 1:
        return 1

    two_part = gcd(8, n)
    odd_primes = _odd_primes(n)
    for sign in (1, -1):
        value = sign * q
        if (value - 1) % two_part:
            continue
        if all(legendre_symbol(value % p, p) == 1 for p in odd_primes):
            return 1
    return -1


def q_quadratic(d: int, n: int, q: int) -> bool:
    """d | n is q-quadratic: gcd(d, n/d) = 1 and q d is +- a residue mod n/d."""
    if d < 1 or n % d:
        raise FormError(f"{d} does not divide {n}")
    if gcd(q, n) != 1:
        raise FormError(f"q={q} is not prime to n={n}")
    rest = n // d
    if gcd(d, rest) != 1:
        return False
    return pm_qr_symbol(q * d % rest, rest) == 1
