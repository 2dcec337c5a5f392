"""Simple / semisimple classification of cyclic linking forms and degree-one verdicts."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import gcd, prod
from typing import FrozenSet, List, Tuple

from sympy import isprime
from sympy.utilities.iterables import multiset_partitions

from ..errors import FormError, NonCyclicTorsion
from ..utils.logger import get_logger
from .forms import CyclicForm, form_isomorphic
from .matrices import SymIntMatrix, block_decompose, diagonalize, to_sympy, torsion_factors
from .residues import pm_qr_symbol, prime_factorization, q_quadratic

logger = get_logger(__name__)


class DegreeOneVerdict(str, Enum):
    DEGREE_ONE = "degree_one"
    INFINITE_DEGREE = "infinite_degree"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class MilnorSet:
    """Finite Milnor degrees realized with a given first homology."""

    degrees: FrozenSet[int]
    complete: bool  # False when semisimple non-simple forms leave degrees open


def _prime_power_parts(n: int) -> List[int]:
    return [p ** e for p, e in prime_factorization(n)]


# =============================================================================
# Simple and semisimple forms
# =============================================================================

def is_simple(f: CyclicForm) -> bool:
    """(q/n) is isomorphic to (+-1/n)."""
    return f.is_trivial() or pm_qr_symbol(f.q, f.n) == 1


@lru_cache(maxsize=65536)
def _semisimple_by_partitions(q: int, n: int) -> bool:
    parts = _prime_power_parts(n)
    if not parts:
        return True
    for partition in multiset_partitions(parts):
        blocks = [prod(block) for block in partition]
        if all(pm_qr_symbol(q * (n // b) % b, b) == 1 for b in blocks):
            logger.debug(f"({q}/{n}) splits simply along {blocks}")
            return True
    return False


def is_semisimple(f: CyclicForm) -> bool:
    """
    (q/n) is an orthogonal sum of simple forms.

    Tries every grouping of the prime-power factors of n into blocks n_i;
    block i contributes the form (q n/n_i / n_i), which must be simple.
    """
    return _semisimple_by_partitions(f.q, f.n)


def is_semisimple_by_divisors(f: CyclicForm) -> bool:
    """
    Same predicate, phrased as: n factors into pairwise coprime n_i with
    every cofactor n/n_i q-quadratic.
    """
    n, q = f.n, f.q
    parts = tuple(_prime_power_parts(n))

    @lru_cache(maxsize=None)
    def covers(remaining: Tuple[int, ...]) -> bool:
        if not remaining:
            return True
        head, rest = remaining[0], remaining[1:]
        for size in range(len(rest) + 1):
            for chosen in combinations(rest, size):
                block = head * prod(chosen)
                if not q_quadratic(n // block, n, q):
                    continue
                left = tuple(x for x in rest if x not in chosen)
                if covers(left):
                    return True
        return False

    return covers(parts)


# =============================================================================
# Properties of the order n
# =============================================================================

def _units(n: int) -> List[int]:
    if n == 1:
        return [0]
    return [q for q in range(1, n) if gcd(q, n) == 1]


@lru_cache(maxsize=4096)
def is_linked(n: int) -> bool:
    """Z_n supports a non-semisimple linking form."""
    if n < 1:
        raise FormError(f"order must be positive, got {n}")
    return any(not is_semisimple(CyclicForm(q, n)) for q in _units(n))


@lru_cache(maxsize=4096)
def is_quasiprime(n: int) -> bool:
    """Every semisimple form on Z_n is simple."""
    if n < 1:
        raise FormError(f"order must be positive, got {n}")
    for q in _units(n):
        f = CyclicForm(q, n)
        if is_semisimple(f) and not is_simple(f):
            return False
    return True


def non_semisimple_representatives(n: int) -> List[int]:
    """Least q per lens space L(n, q), up to orientation, among the non-semisimple forms on Z_n."""
    reps = {
        CyclicForm(q, n).table_representative()
        for q in _units(n)
        if not is_semisimple(CyclicForm(q, n))
    }
    return sorted(reps)


def table1(limit: int, workers: int = 1) -> List[Tuple[int, List[int]]]:
    """
    Non-semisimple cyclic linking forms for n <= limit.

    Returns:
        (n, representatives) rows in increasing n, rows without any
        non-semisimple form omitted.
    """
    if limit < 1:
        raise FormError(f"limit must be positive, got {limit}")
    orders = range(1, limit + 1)
    if workers > 1:
        logger.debug(f"evaluating {limit} orders on {workers} workers")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reps = list(pool.map(non_semisimple_representatives, orders, chunksize=16))
    else:
        reps = [non_semisimple_representatives(n) for n in orders]
    return [(n, r) for n, r in zip(orders, reps) if r]


# =============================================================================
# Degree verdicts and Milnor sets
# =============================================================================

def degree_one_verdict(f: CyclicForm) -> DegreeOneVerdict:
    """
    Milnor degree of a 3-manifold with H_1 = Z_n and linking form ``f``:
    one iff the form is not semisimple, infinite if it is simple, open otherwise.
    """
    if not is_semisimple(f):
        return DegreeOneVerdict.DEGREE_ONE
    if is_simple(f):
        return DegreeOneVerdict.INFINITE_DEGREE
    return DegreeOneVerdict.UNKNOWN


def milnor_set_prime_power(p: int, e: int) -> FrozenSet[int]:
    if not isprime(p):
        raise FormError(f"{p} is not prime")
    if e < 1:
        raise FormError(f"exponent must be positive, got {e}")
    if p % 4 == 1 or (p == 2 and e >= 3):
        return frozenset({1})
    return frozenset()


def milnor_set_cyclic(n: int) -> MilnorSet:
    degrees = frozenset({1}) if is_linked(n) else frozenset()
    return MilnorSet(degrees=degrees, complete=is_quasiprime(n))


# =============================================================================
# Forms presented by linking matrices
# =============================================================================

def cyclic_form_of_matrix(a: SymIntMatrix) -> CyclicForm:
    """
    Linking form on the torsion of coker(A), presented by the inverse of
    the nonsingular core of A on the meridian basis.

    Raises:
        NonCyclicTorsion: The torsion has more than one invariant factor > 1.
    """
    _, core, _ = block_decompose(a)
    if core.size == 0:
        return CyclicForm.trivial()

    factors = torsion_factors(core.entries)
    if len(factors) > 1:
        raise NonCyclicTorsion(factors)
    n = abs(core.determinant())
    if n == 1:
        return CyclicForm.trivial()

    _, d, _, s_inv = diagonalize(core.entries)
    g = [1 if abs(d[i][i]) > 1 else 0 for i in range(core.size)]
    v = to_sympy(s_inv) * to_sympy([[x] for x in g])
    value = (v.T * core.to_sympy().inv() * v)[0, 0]
    scaled = value * n
    if not scaled.is_integer:
        raise FormError(f"self-linking {value} is not in (1/{n})Z")
    return CyclicForm(int(scaled), n).canonical()


def stable_equivalent_cyclic(a: SymIntMatrix, b: SymIntMatrix) -> bool:
    """Same nullity and isomorphic (cyclic) linking forms."""
    if a.nullity() != b.nullity():
        return False
    return form_isomorphic(cyclic_form_of_matrix(a), cyclic_form_of_matrix(b))


def hopf_surgery_form(a: int, b: int) -> CyclicForm:
    """Linking form of surgery on the Hopf link with framings (a, b), the lens space L(ab-1, b)."""
    return cyclic_form_of_matrix(SymIntMatrix(((a, 1), (1, b))))
