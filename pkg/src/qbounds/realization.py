"""Connected-sum recipes for 3-manifolds of prescribed Betti number and Milnor degree."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from ..errors import MilnorError
from ..linkforms.forms import CyclicForm
from .porder import DegreeBound, QuantumData, bing_surgery_order, degree_upper_bound

PLAN_PRIME = 5


@dataclass(frozen=True)
class Summand:
    """``count`` copies of one connected summand."""

    name: str
    count: int
    betti: int
    framings: Optional[Tuple[int, ...]] = None
    b_p: Optional[int] = None
    o_hat: Optional[Fraction] = None


@dataclass
class RealizationPlan:
    b: int
    d: Optional[int]  # None requests infinite degree
    summands: List[Summand] = field(default_factory=list)
    b_p: Optional[int] = None
    o_hat: Optional[Fraction] = None
    bound: Optional[DegreeBound] = None
    note: str = ""

    @property
    def betti(self) -> int:
        return sum(s.count * s.betti for s in self.summands)

    def recipe(self) -> str:
        parts = []
        for s in self.summands:
            if s.count == 0:
                continue
            parts.append(s.name if s.count == 1 else f"{s.count} x {s.name}")
        return " # ".join(parts) if parts else "S3"


def _surgery_summand(framings: Tuple[int, ...], count: int) -> Summand:
    d = len(framings) - 1
    data = bing_surgery_order(d, framings, PLAN_PRIME)
    name = "M(" + ",".join(str(f) for f in framings) + ")"
    betti = sum(1 for f in framings if f == 0)
    return Summand(name, count, betti, framings, data.b_p, data.o_hat)


def realization_plan(b: int, d: Optional[int]) -> RealizationPlan:
    """
    Recipe for a 3-manifold with first Betti number ``b`` and Milnor degree
    ``d`` (None for infinite degree), with the certifying p-order data.

    For d > 1, b = q(d+1) + r gives q copies of M(0,...,0) and one
    M(0^r, 5^(d+1-r)); o_hat adds over the summands and the upper bound
    comes out exactly d.
    """
    if b < 0:
        raise MilnorError(f"b must be nonnegative, got {b}")
    plan = RealizationPlan(b=b, d=d)

    if d is None:
        plan.summands.append(Summand("S1xS2", b, 1))
        plan.note = "zero surgery on an unlink: every Milnor invariant vanishes"
        return plan
    if d < 1:
        raise MilnorError(f"d must be positive, got {d}")

    if d == 1:
        form = CyclicForm(2, 5)
        plan.summands.append(Summand("L(5,2)", 1, 0))
        plan.summands.append(Summand("S1xS2", b, 1))
        plan.note = f"L(5,2) has non-semisimple linking form {form}"
        return plan

    q, r = divmod(b, d + 1)
    plan.summands.append(_surgery_summand((0,) * (d + 1), q))
    plan.summands.append(_surgery_summand((0,) * r + (PLAN_PRIME,) * (d + 1 - r), 1))

    plan.b_p = sum(s.count * s.b_p for s in plan.summands)
    plan.o_hat = sum((s.count * s.o_hat for s in plan.summands), Fraction(0))
    plan.bound = DegreeBound(
        degree_upper_bound(QuantumData(p=PLAN_PRIME, b_p=plan.b_p, o_hat=plan.o_hat))
    )
    plan.note = f"split unions of H^{d} give the lower bound {d}"
    return plan
