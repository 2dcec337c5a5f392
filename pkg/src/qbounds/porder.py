"""Upper bounds on the Milnor degree from quantum p-orders."""

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence, Union

from sympy import isprime

from ..errors import MilnorError, SurgeryHypothesisError, VacuousBound
from ..linkforms.classify import degree_one_verdict, hopf_surgery_form
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class QuantumData:
    """Mod-p Betti number and rescaled quantum p-order of a 3-manifold."""

    p: int
    b_p: int
    o_hat: Fraction

    def __post_init__(self):
        if self.p < 5 or not isprime(self.p):
            raise MilnorError(f"p must be a prime >= 5, got {self.p}")
        if self.b_p < 0:
            raise MilnorError(f"b_p must be nonnegative, got {self.b_p}")
        o_hat = Fraction(self.o_hat)
        if o_hat < 0:
            raise MilnorError(f"o_hat must be nonnegative, got {o_hat}")
        object.__setattr__(self, "o_hat", o_hat)


@dataclass(frozen=True)
class DegreeBound:
    value: Fraction

    @property
    def floor(self) -> int:
        return floor(self.value)

    def __str__(self) -> str:
        return f"{self.value} (floor {self.floor})"


def degree_upper_bound(data: QuantumData) -> Fraction:
    """
    (b_p + o_hat) / (b_p - o_hat), exact.

    Raises:
        VacuousBound: b_p <= o_hat.
    """
    if data.b_p <= data.o_hat:
        raise VacuousBound(
            f"bound undefined: b_p = {data.b_p} does not exceed o_hat = {data.o_hat}"
        )
    return (data.b_p + data.o_hat) / (data.b_p - data.o_hat)


def porder_after_bing_double(o_hat: Union[int, Fraction]) -> Fraction:
    """Bing doubling a component of a link with framings divisible by p adds one to o_hat."""
    return Fraction(o_hat) + 1


def _degree_one_diagnostic(framings: Sequence[int]) -> str:
    if len(framings) != 2:
        return "the Hopf link has two components"
    a, b = framings
    n = a * b - 1
    if n == 0:
        return f"M({a},{b}) is S1xS2"
    form = hopf_surgery_form(a, b)
    verdict = degree_one_verdict(form)
    return (
        f"M({a},{b}) = L({abs(n)},{b}) has linking form {form}, "
        f"Milnor degree verdict '{verdict.value}'"
    )


def bing_surgery_order(d: int, framings: Sequence[int], p: int) -> QuantumData:
    """
    (b_p, o_hat) of M(n_0, ..., n_d), surgery on H^d with framings n_i all
    divisible by p: b_p = d+1 and o_hat = d-1, by d-1 doubling steps from
    M(0, 0) = S^3 with o_hat 0.

    Raises:
        SurgeryHypothesisError: d = 1, wrong number of framings, or a framing
            not divisible by p.
    """
    framings = [int(f) for f in framings]
    if p < 5 or not isprime(p):
        raise MilnorError(f"p must be a prime >= 5, got {p}")
    if d == 1:
        raise SurgeryHypothesisError(
            "d > 1", f"the degree bound fails in general for d = 1: {_degree_one_diagnostic(framings)}"
        )
    if d < 1:
        raise SurgeryHypothesisError("d > 1", f"got d = {d}")
    if len(framings) != d + 1:
        raise SurgeryHypothesisError(
            "d + 1 framings", f"H^{d} has {d + 1} components, got {len(framings)} framings"
        )
    bad = [f for f in framings if f % p]
    if bad:
        raise SurgeryHypothesisError(
            "framings divisible by p", f"{bad} not divisible by p = {p}"
        )

    o_hat = Fraction(0)
    for _ in range(d - 1):
        o_hat = porder_after_bing_double(o_hat)
    data = QuantumData(p=p, b_p=d + 1, o_hat=o_hat)
    logger.debug(f"M{tuple(framings)}: b_{p} = {data.b_p}, o_hat = {data.o_hat}")
    return data
