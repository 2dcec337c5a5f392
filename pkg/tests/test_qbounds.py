from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.errors import MilnorError, SurgeryHypothesisError, VacuousBound
from src.linkforms import CyclicForm, DegreeOneVerdict, degree_one_verdict
from src.links import hopf_family
from src.qbounds import (
    PLAN_PRIME,
    DegreeBound,
    QuantumData,
    bing_surgery_order,
    degree_upper_bound,
    porder_after_bing_double,
    realization_plan,
)


def bound(b_p, o_hat, p=5):
    return degree_upper_bound(QuantumData(p=p, b_p=b_p, o_hat=Fraction(o_hat)))


def test_upper_bound_examples():
    for d in range(2, 11):
        assert bound(d + 1, d - 1) == d
        for q in range(4):
            assert bound((q + 1) * (d + 1), (q + 1) * (d - 1)) == d
    assert bound(1, 0) == 1
    assert bound(4, Fraction(3, 2)) == Fraction(11, 5)


def test_vacuous_bound():
    with pytest.raises(VacuousBound):
        bound(3, 3)
    with pytest.raises(VacuousBound):
        bound(0, 0)


def test_quantum_data_validation():
    for p in (2, 3, 4, 9):
        with pytest.raises(MilnorError):
            QuantumData(p=p, b_p=1, o_hat=Fraction(0))
    with pytest.raises(MilnorError):
        QuantumData(p=5, b_p=-1, o_hat=Fraction(0))
    with pytest.raises(MilnorError):
        QuantumData(p=5, b_p=1, o_hat=Fraction(-1, 2))


fractions = st.fractions(min_value=0, max_value=20, max_denominator=6)


@settings(max_examples=200, derandomize=True)
@given(st.integers(1, 40), st.integers(1, 5), fractions, fractions)
def test_bound_monotone(b_p, step, o_hat, o_more):
    if b_p <= max(o_hat, o_more):
        return
    lo, hi = sorted((o_hat, o_more))
    assert bound(b_p, lo) <= bound(b_p, hi)
    assert bound(b_p + step, o_hat) <= bound(b_p, o_hat)


def test_degree_bound_floor():
    b = DegreeBound(Fraction(11, 5))
    assert b.floor == 2
    assert str(b) == "11/5 (floor 2)"


def test_bing_double_adds_one():
    assert porder_after_bing_double(0) == 1
    assert porder_after_bing_double(Fraction(3, 2)) == Fraction(5, 2)


def test_bing_surgery_order_examples():
    data = bing_surgery_order(2, (5, 5, 5), 5)
    assert (data.b_p, data.o_hat) == (3, 1)
    assert degree_upper_bound(data) == 2

    data = bing_surgery_order(4, (0,) * 5, 5)
    assert (data.b_p, data.o_hat) == (5, 3)
    assert degree_upper_bound(data) == 4


def test_bing_surgery_order_rejects_degree_one():
    with pytest.raises(SurgeryHypothesisError) as exc:
        bing_surgery_order(1, (7, 7), 7)
    message = str(exc.value)
    assert "M(7,7) = L(48,7)" in message
    assert "(7/48)" in message
    assert "degree_one" in message


def test_bing_surgery_order_rejects_bad_framings():
    with pytest.raises(SurgeryHypothesisError):
        bing_surgery_order(2, (5, 5, 6), 5)
    with pytest.raises(SurgeryHypothesisError):
        bing_surgery_order(2, (5, 5), 5)
    with pytest.raises(MilnorError):
        bing_surgery_order(2, (3, 3, 3), 3)


@pytest.mark.parametrize("d", range(2, 11))
def test_upper_bound_meets_lower_bound(d):
    data = bing_surgery_order(d, (PLAN_PRIME,) * (d + 1), PLAN_PRIME)
    assert degree_upper_bound(data) == d
    if d <= 5:
        assert hopf_family(d).degree(d + 1).degree == d


def test_plan_rational_homology_sphere():
    plan = realization_plan(0, 3)
    assert plan.recipe() == "M(5,5,5,5)"
    assert plan.betti == 0
    assert plan.bound.value == 3


def test_plan_with_remainder():
    plan = realization_plan(7, 2)
    assert plan.recipe() == "2 x M(0,0,0) # M(0,5,5)"
    assert plan.betti == 7
    assert (plan.b_p, plan.o_hat) == (9, 3)
    assert plan.bound.value == 2


def test_plan_degree_one_and_infinite():
    plan = realization_plan(3, 1)
    assert plan.recipe() == "L(5,2) # 3 x S1xS2"
    assert degree_one_verdict(CyclicForm(2, 5)) is DegreeOneVerdict.DEGREE_ONE
    assert plan.betti == 3
    assert plan.bound is None

    assert realization_plan(4, None).recipe() == "4 x S1xS2"
    assert realization_plan(0, None).recipe() == "S3"
    assert realization_plan(1, None).betti == 1


def test_plan_o_hat_adds_over_summands():
    plan = realization_plan(11, 3)
    assert plan.o_hat == sum(s.count * s.o_hat for s in plan.summands)
    assert plan.b_p == sum(s.count * s.b_p for s in plan.summands)


@pytest.mark.parametrize("d", range(2, 11))
def test_plan_sandwich_closes(d):
    for b in range(0, 13):
        plan = realization_plan(b, d)
        assert plan.betti == b
        assert plan.bound.value == d


def test_plan_rejects_bad_input():
    with pytest.raises(MilnorError):
        realization_plan(-1, 2)
    with pytest.raises(MilnorError):
        realization_plan(2, 0)
