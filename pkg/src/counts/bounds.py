"""Grid checks of the counting inequalities behind positivity of M_k^r."""

from dataclasses import dataclass, field
from typing import List, Tuple

from ..errors import MilnorError
from ..utils.logger import get_logger
from .witt import alternating_terms, milnor_number, p_sum, witt

logger = get_logger(__name__)

Pair = Tuple[int, int]

EXCEPTIONAL_PAIRS: Tuple[Pair, ...] = ((2, 2), (2, 4), (2, 6))


def _grid(r_max: int, k_max: int):
    if r_max < 2 or k_max < 2:
        raise MilnorError(f"grid bounds must be >= 2, got ({r_max}, {k_max})")
    for r in range(2, r_max + 1):
        for k in range(2, k_max + 1):
            yield r, k


def _expected_exceptions(r_max: int, k_max: int) -> List[Pair]:
    return [(r, k) for r, k in EXCEPTIONAL_PAIRS if r <= r_max and k <= k_max]


@dataclass
class LemmaBReport:
    """r^k > P(r^k) everywhere, and r^k >= (k+1) P(r^k) off the exceptions."""

    r_max: int
    k_max: int
    weak_failures: List[Pair] = field(default_factory=list)
    strong_failures: List[Pair] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.weak_failures and self.strong_failures == _expected_exceptions(
            self.r_max, self.k_max
        )


@dataclass
class StarBoundsReport:
    """r^k/(k+1) <= N_k^r < r^k/k; the lower bound fails only at the exceptions."""

    r_max: int
    k_max: int
    upper_failures: List[Pair] = field(default_factory=list)
    lower_failures: List[Pair] = field(default_factory=list)
    non_decreasing: List[Pair] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            not self.upper_failures
            and not self.non_decreasing
            and self.lower_failures == _expected_exceptions(self.r_max, self.k_max)
        )


@dataclass
class MilnorGridReport:
    """M_k^r over the grid: zero exactly at the exceptions, never negative."""

    r_max: int
    k_max: int
    zero_pairs: List[Pair] = field(default_factory=list)
    negative_pairs: List[Pair] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.negative_pairs and self.zero_pairs == _expected_exceptions(
            self.r_max, self.k_max
        )


def verify_lemma_b(r_max: int, k_max: int) -> LemmaBReport:
    report = LemmaBReport(r_max, k_max)
    for r, k in _grid(r_max, k_max):
        power, primes = r ** k, p_sum(r, k)
        if not power > primes:
            report.weak_failures.append((r, k))
        if not power >= (k + 1) * primes:
            report.strong_failures.append((r, k))
    logger.debug(f"lemma grid {r_max}x{k_max}: strong failures {report.strong_failures}")
    return report


def verify_star_bounds(r_max: int, k_max: int) -> StarBoundsReport:
    """
    Check both bounds with integer arithmetic, plus strict decrease of the
    alternating terms n_0 > n_1 > ... > 0 at every generic pair.
    """
    report = StarBoundsReport(r_max, k_max)
    exceptional = set(EXCEPTIONAL_PAIRS)
    for r, k in _grid(r_max, k_max):
        n, power = witt(r, k), r ** k
        if not k * n < power:
            report.upper_failures.append((r, k))
        if not power <= (k + 1) * n:
            report.lower_failures.append((r, k))
        if (r, k) not in exceptional:
            terms = alternating_terms(r, k)
            if any(a <= b for a, b in zip(terms, terms[1:])) or terms[-1] <= 0:
                report.non_decreasing.append((r, k))
    return report


def verify_milnor_grid(r_max: int, k_max: int) -> MilnorGridReport:
    report = MilnorGridReport(r_max, k_max)
    for r, k in _grid(r_max, k_max):
        m = milnor_number(r, k)
        if m == 0:
            report.zero_pairs.append((r, k))
        elif m < 0:
            report.negative_pairs.append((r, k))
    return report
