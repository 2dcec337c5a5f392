"""Render report records as text, CSV or JSON lines."""

import csv
import io
from typing import List, Sequence

from ..config import OUTPUT_FORMATS
from ..counts.bounds import verify_lemma_b, verify_milnor_grid, verify_star_bounds
from ..linkforms.classify import degree_one_verdict, is_semisimple, is_simple, table1
from ..linkforms.forms import CyclicForm
from ..links.models import LongitudeLink
from ..qbounds.porder import DegreeBound, QuantumData, degree_upper_bound
from ..qbounds.realization import RealizationPlan
from .records import (
    BoundRecord,
    DegreeRecord,
    FormRecord,
    GridRecord,
    PlanRecord,
    Record,
    Table1Row,
)


def _csv_cell(value) -> str:
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    if value is None:
        return ""
    return str(value)


def render(records: Sequence[Record], fmt: str = "text") -> str:
    """
    One line per record. CSV gets a header from the first record's fields
    and joins list fields with spaces.
    """
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(f"format must be one of {OUTPUT_FORMATS}, got {fmt}")
    if not records:
        return ""

    if fmt == "text":
        return "".join(r.text() + "\n" for r in records)

    if fmt == "json-lines":
        return "".join(r.model_dump_json() + "\n" for r in records)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    fields = list(type(records[0]).model_fields)
    writer.writerow(fields)
    for r in records:
        data = r.model_dump()
        writer.writerow([_csv_cell(data[f]) for f in fields])
    return buffer.getvalue()


# =============================================================================
# Engine results -> records
# =============================================================================

def degree_record(link: LongitudeLink, cap: int, source: str) -> DegreeRecord:
    verdict = link.degree(cap)
    witness = verdict.witness
    return DegreeRecord(
        source=source,
        components=link.components,
        cap=cap,
        degree=verdict.degree,
        exact=verdict.is_exact,
        witness=None if witness is None else witness.name(),
        coefficient=None if witness is None else witness.coefficient,
    )


def form_record(form: CyclicForm) -> FormRecord:
    return FormRecord(
        q=form.q,
        n=form.n,
        canonical=str(form.canonical()),
        simple=is_simple(form),
        semisimple=is_semisimple(form),
        verdict=degree_one_verdict(form).value,
    )


def table1_records(limit: int, workers: int = 1) -> List[Table1Row]:
    return [Table1Row(n=n, representatives=reps) for n, reps in table1(limit, workers=workers)]


def _pairs(pairs) -> List[str]:
    return [f"({r},{k})" for r, k in pairs]


def grid_records(r_max: int, k_max: int) -> List[GridRecord]:
    lemma = verify_lemma_b(r_max, k_max)
    star = verify_star_bounds(r_max, k_max)
    milnor = verify_milnor_grid(r_max, k_max)
    return [
        GridRecord(
            check="lemma_b",
            r_max=r_max,
            k_max=k_max,
            ok=lemma.ok,
            exceptions=_pairs(lemma.strong_failures),
            violations=_pairs(lemma.weak_failures),
        ),
        GridRecord(
            check="star_bounds",
            r_max=r_max,
            k_max=k_max,
            ok=star.ok,
            exceptions=_pairs(star.lower_failures),
            violations=_pairs(star.upper_failures + star.non_decreasing),
        ),
        GridRecord(
            check="milnor_numbers",
            r_max=r_max,
            k_max=k_max,
            ok=milnor.ok,
            exceptions=_pairs(milnor.zero_pairs),
            violations=_pairs(milnor.negative_pairs),
        ),
    ]


def bound_record(data: QuantumData) -> BoundRecord:
    bound = DegreeBound(degree_upper_bound(data))
    return BoundRecord(
        p=data.p, b_p=data.b_p, o_hat=str(data.o_hat), bound=str(bound.value), floor=bound.floor
    )


def plan_record(plan: RealizationPlan) -> PlanRecord:
    return PlanRecord(
        b=plan.b,
        d="infinite" if plan.d is None else str(plan.d),
        recipe=plan.recipe(),
        betti=plan.betti,
        b_p=plan.b_p,
        o_hat=None if plan.o_hat is None else str(plan.o_hat),
        bound=None if plan.bound is None else str(plan.bound.value),
        note=plan.note,
    )
