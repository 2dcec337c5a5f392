"""Quantum p-order arithmetic: degree upper bounds and realization recipes."""

from .porder import (
    DegreeBound,
    QuantumData,
    bing_surgery_order,
    degree_upper_bound,
    porder_after_bing_double,
)
from .realization import PLAN_PRIME, RealizationPlan, Summand, realization_plan

__all__ = [
    "DegreeBound",
    "QuantumData",
    "bing_surgery_order",
    "degree_upper_bound",
    "porder_after_bing_double",
    "PLAN_PRIME",
    "RealizationPlan",
    "Summand",
    "realization_plan",
]
