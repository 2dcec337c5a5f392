import pytest
from hypothesis import given, settings, strategies as st

from src.errors import LowerDegreeNonvanishing, RankMismatch, TruncationError, WordError
from src.magnus import (
    DegreeVerdict,
    FreeWord,
    MagnusPolynomial,
    Witness,
    commutator,
    lcs_member,
    link_degree,
    linking_number,
    magnus_expand,
    mu_bar,
)

RANK = 3

letters = st.sampled_from([1, -1, 2, -2, 3, -3])
words = st.lists(letters, max_size=8).map(lambda s: FreeWord.from_signed(RANK, s))
caps = st.integers(min_value=1, max_value=5)


def m(i, rank=RANK, exponent=1):
    return FreeWord.generator(rank, i, exponent)


HOPF = (FreeWord.generator(2, 2), FreeWord.generator(2, 1))
BORROMEAN = (commutator(m(2), m(3)), commutator(m(3), m(1)), commutator(m(2), m(1)))
UNLINK = tuple(FreeWord.identity(RANK) for _ in range(RANK))


# =============================================================================
# Words
# =============================================================================

def test_words_are_freely_reduced():
    w = FreeWord.from_signed(RANK, [1, 2, -2, -1, 3])
    assert w.signed() == (3,)
    assert str(FreeWord.identity(2)) == "e"
    assert str(FreeWord.from_signed(2, [1, -2])) == "m1 m2^-1"


def test_commutator_expands_to_four_letters():
    assert commutator(m(1), m(2)).signed() == (1, 2, -1, -2)


def test_word_rejects_bad_generator():
    with pytest.raises(WordError):
        FreeWord.generator(2, 3)
    with pytest.raises(WordError):
        m(1) * FreeWord.generator(2, 1)


# =============================================================================
# Magnus expansion
# =============================================================================

def test_expand_generator():
    assert magnus_expand(m(1), 3) == MagnusPolynomial(RANK, 3, {(): 1, (1,): 1})


def test_expand_inverse_is_truncated_geometric_series():
    expected = MagnusPolynomial(1, 2, {(): 1, (1,): -1, (1, 1): 1})
    assert magnus_expand(FreeWord.generator(1, 1, -1), 2) == expected


def test_expand_commutator():
    w = commutator(FreeWord.generator(2, 1), FreeWord.generator(2, 2))
    expected = MagnusPolynomial(2, 2, {(): 1, (1, 2): 1, (2, 1): -1})
    assert magnus_expand(w, 2) == expected
    assert str(magnus_expand(w, 2)) == "1 + h1h2 - h2h1"


def test_expand_rejects_zero_cap():
    with pytest.raises(TruncationError):
        magnus_expand(m(1), 0)


def test_coefficients_do_not_overflow():
    w = FreeWord.generator(1, 1, -1) ** 40
    # (1 + h)^-40 has coefficient C(51, 12) on h^12
    assert magnus_expand(w, 12).coefficient((1,) * 12) == 158753389900


@settings(max_examples=400, derandomize=True)
@given(words, words, caps)
def test_expansion_is_multiplicative(u, v, cap):
    assert magnus_expand(u * v, cap) == magnus_expand(u, cap) * magnus_expand(v, cap)


@settings(max_examples=300, derandomize=True)
@given(words, caps)
def test_expansion_of_inverse_is_inverse(w, cap):
    product = magnus_expand(w, cap) * magnus_expand(~w, cap)
    assert product == MagnusPolynomial.one(RANK, cap)


# =============================================================================
# Lower central series
# =============================================================================

def test_lcs_examples():
    c = commutator(FreeWord.generator(2, 1), FreeWord.generator(2, 2))
    assert lcs_member(c, 2)
    assert not lcs_member(c, 3)
    assert lcs_member(FreeWord.identity(2), 10)
    assert lcs_member(m(1), 1)


def _depth(w: FreeWord, limit: int = 4) -> int:
    k = 1
    while k < limit and lcs_member(w, k + 1):
        k += 1
    return k


@st.composite
def graded_words(draw):
    w = draw(words)
    for _ in range(draw(st.integers(0, 2))):
        w = commutator(w, draw(words))
    return w


@settings(max_examples=200, derandomize=True)
@given(graded_words(), graded_words())
def test_commutator_raises_lcs_degree(u, v):
    a, b = _depth(u, 3), _depth(v, 3)
    assert lcs_member(commutator(u, v), a + b)


@settings(max_examples=200, derandomize=True)
@given(graded_words(), words, st.integers(1, 5))
def test_lcs_membership_is_conjugation_invariant(w, g, k):
    assert lcs_member(w, k) == lcs_member(w.conjugate(g), k)


# =============================================================================
# Invariants and degrees
# =============================================================================

def test_hopf_linking_number():
    assert mu_bar(HOPF, (2, 1)) == 1
    assert linking_number(HOPF, 1, 2) == 1


def test_borromean_invariants():
    assert mu_bar(BORROMEAN, (2, 3, 1)) == 1
    assert mu_bar(BORROMEAN, (3, 2, 1)) == -1


def test_unlink_invariants_vanish():
    assert mu_bar(UNLINK, (2, 3, 1)) == 0
    assert mu_bar(UNLINK, (1, 2, 3, 1)) == 0


def test_strict_mode_rejects_non_first_nonvanishing():
    with pytest.raises(LowerDegreeNonvanishing) as exc:
        mu_bar(HOPF, (1, 1, 2))
    assert exc.value.degree == 1
    assert "mu(21) = 1" in str(exc.value)
    assert mu_bar(HOPF, (1, 1, 2), strict=False) == 0


def test_mu_bar_rejects_bad_indices():
    with pytest.raises(WordError):
        mu_bar(HOPF, (1,))
    with pytest.raises(WordError):
        mu_bar(HOPF, (3, 1))


def test_link_degree_examples():
    assert link_degree(HOPF, 4) == DegreeVerdict.exact(1, Witness((2, 1), 1))
    borromean = link_degree(BORROMEAN, 4)
    assert borromean.degree == 2 and borromean.is_exact
    assert borromean.witness.label() == "mu(231)=1"
    assert link_degree(UNLINK, 6) == DegreeVerdict.at_least(6)


def test_link_degree_rejects_rank_mismatch_and_small_cap():
    with pytest.raises(RankMismatch):
        link_degree((m(2), FreeWord.generator(2, 1)), 3)
    with pytest.raises(TruncationError):
        link_degree(HOPF, 1)


def _nested(rank, indices):
    w = FreeWord.generator(rank, indices[-1])
    for i in reversed(indices[:-1]):
        w = commutator(FreeWord.generator(rank, i), w)
    return w


@settings(max_examples=100, derandomize=True)
@given(st.integers(0, 2), st.lists(st.integers(1, RANK), min_size=3, max_size=3))
def test_degree_ignores_deep_corrections(i, indices):
    cap = 3
    corrected = list(BORROMEAN)
    corrected[i] = corrected[i] * _nested(RANK, indices)
    assert link_degree(corrected, cap) == link_degree(BORROMEAN, cap)


def test_witness_names():
    assert Witness((2, 3, 1), 1).name() == "mu(231)"
    assert Witness((1, 10, 2), -2).label() == "mu(1,10,2)=-2"


def test_verdict_combine_and_str():
    e2, e3, a4 = DegreeVerdict.exact(2), DegreeVerdict.exact(3), DegreeVerdict.at_least(4)
    assert e2.combine(e3) == e2
    assert a4.combine(e3) == e3
    assert e2.combine(DegreeVerdict.at_least(2)).degree == 2
    assert DegreeVerdict.at_least(5).combine(a4) == a4
    assert str(e3) == "exact 3"
    assert str(a4) == ">= 4"


def test_polynomial_arithmetic():
    x = MagnusPolynomial.variable(2, 3, 1)
    y = MagnusPolynomial.variable(2, 3, 2)
    one = MagnusPolynomial.one(2, 3)
    assert (x * y - y * x).homogeneous(2) == {(1, 2): 1, (2, 1): -1}
    assert ((one + x) * (one - x)).coefficient((1, 1)) == -1
    assert (x * x * x * x).is_one() is False
    assert len(x * x * x * x) == 0
    assert (one + x).truncate(1).lowest_degree() == 1
