"""Exact symmetric integer matrices: diagonalization, torsion and block decomposition."""

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple

from sympy import Matrix, ilcm
from sympy.matrices.normalforms import invariant_factors as _sympy_invariant_factors
from sympy.polys.domains import ZZ

from ..errors import FormError
from ..utils.logger import get_logger

logger = get_logger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


def _identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _freeze(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def to_sympy(rows: Sequence[Sequence[int]]) -> Matrix:
    return Matrix([list(row) for row in rows]) if rows else Matrix(0, 0, [])


def from_sympy(m: Matrix) -> IntMatrix:
    return tuple(tuple(int(m[i, j]) for j in range(m.cols)) for i in range(m.rows))


@dataclass(frozen=True)
class SymIntMatrix:
    """
    Symmetric integer matrix, e.g. the linking matrix of a framed link
    with framings on the diagonal.
    """

    entries: IntMatrix

    def __post_init__(self):
        rows = _freeze(self.entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise FormError(f"row {i + 1} has {len(row)} entries, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise FormError(
                        f"matrix is not symmetric at ({i + 1},{j + 1}): "
                        f"{rows[i][j]} != {rows[j][i]}"
                    )
        object.__setattr__(self, "entries", rows)

    @classmethod
    def diagonal(cls, *values: int) -> "SymIntMatrix":
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.entries)

    def to_sympy(self) -> Matrix:
        return to_sympy(self.entries)

    def determinant(self) -> int:
        if self.size == 0:
            return 1
        return int(self.to_sympy().det(method="bareiss"))

    def rank(self) -> int:
        if self.size == 0:
            return 0
        return self.to_sympy().rank()

    def nullity(self) -> int:
        return self.size - self.rank()

    def block_sum(self, other: "SymIntMatrix") -> "SymIntMatrix":
        """self (+) other, block diagonal."""
        n, m = self.size, other.size
        rows = [list(row) + [0] * m for row in self.entries]
        rows += [[0] * n + list(row) for row in other.entries]
        return SymIntMatrix(_freeze(rows))

    def congruent(self, change: Sequence[Sequence[int]]) -> "SymIntMatrix":
        """P^T A P."""
        p = to_sympy(change)
        return SymIntMatrix(from_sympy(p.T * self.to_sympy() * p))

    def submatrix(self, start: int) -> "SymIntMatrix":
        """Lower-right block from index ``start`` on."""
        return SymIntMatrix(tuple(row[start:] for row in self.entries[start:]))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


# =============================================================================
# Diagonalization over Z
# =============================================================================

def exgcd(a: int, b: int) -> List[List[int]]:
    """
    2x2 integer matrix M of determinant 1 with M (a, b)^T = (g, 0)^T,
    where g = +-gcd(a, b). If a divides b, M[0][1] == 0.
    """
    a_sign = -1 if a < 0 else 1
    b_sign = -1 if b < 0 else 1
    a, b = a * a_sign, b * b_sign

    # Euclid on the column (b, a) with the identity carried alongside
    rows = [[b, 0, 1], [a, 1, 0]]
    while rows[1][0] != 0:
        q = rows[0][0] // rows[1][0]
        rows[0] = [x - q * y for x, y in zip(rows[0], rows[1])]
        rows.reverse()

    g = rows[0][0]
    m = [[rows[0][1] * a_sign, rows[0][2] * b_sign], [rows[1][1] * a_sign, rows[1][2] * b_sign]]
    if g != 0:
        m[1] = [-b_sign * b // g, a_sign * a // g]
    else:
        m = [[1, 0], [0, 1]]
    return m


def _inv_det1(m: List[List[int]]) -> List[List[int]]:
    return [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]


def diagonalize(rows: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, IntMatrix, IntMatrix]:
    """
    Find unimodular S, T with S A T = D diagonal (no divisibility chain).

    Returns:
        (S, D, T, S_inv)
    """
    d = [list(map(int, row)) for row in rows]
    n = len(d)
    s = _identity(n)
    s_inv = _identity(n)
    t = _identity(n)

    def clear_col(i: int) -> bool:
        if all(d[j][i] == 0 for j in range(i + 1, n)):
            return False
        for j in range(i + 1, n):
            m = exgcd(d[i][i], d[j][i])
            inv = _inv_det1(m)
            d[i], d[j] = (
                [m[0][0] * x + m[0][1] * y for x, y in zip(d[i], d[j])],
                [m[1][0] * x + m[1][1] * y for x, y in zip(d[i], d[j])],
            )
            s[i], s[j] = (
                [m[0][0] * x + m[0][1] * y for x, y in zip(s[i], s[j])],
                [m[1][0] * x + m[1][1] * y for x, y in zip(s[i], s[j])],
            )
            for row in s_inv:
                row[i], row[j] = (
                    row[i] * inv[0][0] + row[j] * inv[1][0],
                    row[i] * inv[0][1] + row[j] * inv[1][1],
                )
        return True

    def clear_row(i: int) -> bool:
        if all(d[i][j] == 0 for j in range(i + 1, n)):
            return False
        for j in range(i + 1, n):
            m = exgcd(d[i][i], d[i][j])
            for row in d:
                row[i], row[j] = (
                    row[i] * m[0][0] + row[j] * m[0][1],
                    row[i] * m[1][0] + row[j] * m[1][1],
                )
            for row in t:
                row[i], row[j] = (
                    row[i] * m[0][0] + row[j] * m[0][1],
                    row[i] * m[1][0] + row[j] * m[1][1],
                )
        return True

    for i in range(n):
        clear_col(i)
        while clear_row(i) and clear_col(i):
            pass

    return _freeze(s), _freeze(d), _freeze(t), _freeze(s_inv)


def invariant_factors(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Nonnegative invariant factors of an integer matrix (units included)."""
    if not rows:
        return ()
    factors = _sympy_invariant_factors(to_sympy(rows), domain=ZZ)
    return tuple(abs(int(f)) for f in factors)


def torsion_factors(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Invariant factors > 1: the torsion of coker(A) is the sum of Z_f."""
    return tuple(f for f in invariant_factors(rows) if f > 1)


# =============================================================================
# Block decomposition
# =============================================================================

def primitive_null_vector(a: SymIntMatrix) -> Tuple[int, ...]:
    """
    First rational nullspace vector of ``a``, scaled to a primitive integer
    vector whose first nonzero entry is positive.
    """
    basis = a.to_sympy().nullspace()
    if not basis:
        raise FormError("matrix is nonsingular, no null vector")
    vec = basis[0]
    scale = reduce(ilcm, [x.q for x in vec], 1)
    ints = [int(x * scale) for x in vec]
    content = reduce(gcd, ints, 0)
    ints = [x // content for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def complete_to_basis(v: Sequence[int]) -> IntMatrix:
    """
    Unimodular matrix whose first column is the primitive vector ``v``.

    Row-reduces v to e_1 with Euclid steps and applies the inverse of
    every step to the identity as a column operation.
    """
    v = [int(x) for x in v]
    n = len(v)
    if n == 0 or reduce(gcd, v, 0) != 1:
        raise FormError(f"vector {tuple(v)} is not primitive")
    q = _identity(n)

    while sum(1 for x in v if x != 0) > 1:
        p = min((i for i in range(n) if v[i] != 0), key=lambda i: abs(v[i]))
        for i in range(n):
            if i == p or v[i] == 0:
                continue
            c = v[i] // v[p]
            v[i] -= c * v[p]
            for row in q:
                row[p] += c * row[i]

    p = next(i for i in range(n) if v[i] != 0)
    if p != 0:
        v[0], v[p] = v[p], v[0]
        for row in q:
            row[0], row[p] = row[p], row[0]
    if v[0] == -1:
        for row in q:
            row[0] = -row[0]
    return _freeze(q)


def _embed(block: IntMatrix, n: int, offset: int) -> IntMatrix:
    out = _identity(n)
    for i, row in enumerate(block):
        for j, x in enumerate(row):
            out[offset + i][offset + j] = x
    return _freeze(out)


def block_decompose(a: SymIntMatrix) -> Tuple[int, SymIntMatrix, IntMatrix]:
    """
    Split off the radical of a symmetric integer matrix.

    Repeatedly takes a primitive null vector of the remaining block,
    completes it to a basis and changes coordinates, until the remaining
    block is nonsingular.

    Returns:
        (nullity, core, P) with P unimodular and P^T A P = 0_nullity (+) core.
    """
    n = a.size
    change = _freeze(_identity(n))
    current = a
    offset = 0
    while offset < n:
        block = current.submatrix(offset)
        if block.determinant() != 0:
            break
        v = primitive_null_vector(block)
        step = _embed(complete_to_basis(v), n, offset)
        change = from_sympy(to_sympy(change) * to_sympy(step))
        current = current.congruent(step)
        logger.debug(f"split off null vector {v} at offset {offset}")
        offset += 1

    return offset, current.submatrix(offset), change
