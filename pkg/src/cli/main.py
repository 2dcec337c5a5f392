"""Command-line front end: ``python run_cli.py <command> ...``."""

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from ..config import OUTPUT_FORMATS, load_config
from ..counts.witt import milnor_number, witt
from ..errors import MilnorError
from ..linkforms.classify import cyclic_form_of_matrix, degree_one_verdict
from ..linkforms.forms import CyclicForm, form_split
from ..linkforms.matrices import block_decompose, torsion_factors
from ..magnus.invariants import Witness
from ..links.bing import hopf_family
from ..qbounds.porder import QuantumData, bing_surgery_order
from ..qbounds.realization import realization_plan
from ..utils.logger import setup_logger
from .linkfile import parse_link_file, parse_matrix_file
from .records import (
    CountRecord,
    InvariantRecord,
    MatrixFormRecord,
    Record,
    SplitRecord,
    VerdictRecord,
)
from .reports import (
    bound_record,
    degree_record,
    form_record,
    grid_records,
    plan_record,
    render,
    table1_records,
)


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def _invariant(text: str) -> List[int]:
    if "," in text:
        return _int_list(text)
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected an index sequence like 231 or 2,3,1, got '{text}'")
    return [int(c) for c in text]


def _degree(text: str) -> Optional[int]:
    if text.lower() in ("inf", "infinity"):
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got '{text}'")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 3 or 5/2, got '{text}'")


class _PlanAction(argparse.Action):
    """--plan B D: B a finite Betti number, D a degree or 'inf'."""

    def __call__(self, parser, namespace, values, option_string=None):
        b, d = values
        if b is None:
            parser.error(f"{option_string}: B must be an integer")
        setattr(namespace, self.dest, (b, d))


def _read_input(name: str, config) -> str:
    """Read a link or matrix file, falling back to the configured testdata directory."""
    path = Path(name)
    if not path.exists() and not path.is_absolute():
        fallback = Path(config.output.testdata_dir) / path
        if fallback.exists():
            path = fallback
    return path.read_text(encoding="utf-8")


# =============================================================================
# Commands
# =============================================================================

def cmd_mu(args, config) -> List[Record]:
    link = parse_link_file(_read_input(args.file, config))
    if args.invariant is not None:
        strict = config.compute.strict_mu and not args.no_strict
        value = link.mu(args.invariant, strict=strict)
        name = Witness(tuple(args.invariant), value).name()
        return [InvariantRecord(source=args.file, invariant=name, value=value)]
    cap = args.cap or link.valid_to or config.compute.default_cap
    return [degree_record(link, cap, args.file)]


def cmd_hopf(args, config) -> List[Record]:
    if args.surgery_framings is not None:
        return [bound_record(bing_surgery_order(args.d, args.surgery_framings, args.p))]
    link = hopf_family(args.d)
    return [degree_record(link, args.cap or args.d + 1, f"H^{args.d}")]


def cmd_linkform(args, config) -> List[Record]:
    if args.mode == "matrix":
        if len(args.values) != 1:
            raise MilnorError("linkform matrix takes exactly one file")
        source = args.values[0]
        matrix = parse_matrix_file(_read_input(source, config))
        nullity, core, _ = block_decompose(matrix)
        torsion = list(torsion_factors(core.entries)) if core.size else []
        form = cyclic_form_of_matrix(matrix)
        return [
            MatrixFormRecord(
                source=source,
                size=matrix.size,
                nullity=nullity,
                torsion=torsion,
                form=str(form),
                verdict=degree_one_verdict(form).value if nullity == 0 else None,
            )
        ]

    if len(args.values) != 2:
        raise MilnorError("linkform cyclic takes q and n")
    try:
        q, n = (int(v) for v in args.values)
    except ValueError:
        raise MilnorError(f"q and n must be integers, got {args.values}") from None
    form = CyclicForm(q, n)
    if args.split is not None:
        fs = form_split(form, args.split)
        return [SplitRecord(q=form.q, n=form.n, summands=[str(f) for f in fs.summands])]
    if args.verdict:
        return [VerdictRecord(q=form.q, n=form.n, verdict=degree_one_verdict(form).value)]
    return [form_record(form)]


def cmd_table1(args, config) -> List[Record]:
    workers = args.workers or config.compute.workers
    return table1_records(args.limit or config.compute.table_limit, workers=workers)


def cmd_counts(args, config) -> List[Record]:
    if args.witt is not None:
        r, k = args.witt
        return [CountRecord(quantity="witt", r=r, k=k, value=witt(r, k))]
    if args.milnor is not None:
        r, k = args.milnor
        return [CountRecord(quantity="milnor", r=r, k=k, value=milnor_number(r, k))]
    r_max, k_max = args.verify_grid or (config.compute.grid_r, config.compute.grid_k)
    return grid_records(r_max, k_max)


def cmd_qbound(args, config) -> List[Record]:
    if args.plan is not None:
        b, d = args.plan
        return [plan_record(realization_plan(b, d))]
    if args.bp is None or args.ohat is None:
        raise MilnorError("qbound needs --bp and --ohat, or --plan")
    return [bound_record(QuantumData(p=args.p, b_p=args.bp, o_hat=args.ohat))]


# =============================================================================
# Parser
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="report format")

    parser = argparse.ArgumentParser(
        prog="milnor",
        description="Milnor invariants, linking forms and Milnor-degree bounds",
    )
    parser.add_argument("--config", type=Path, default=None, help="path to config.yaml")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mu = sub.add_parser("mu", parents=[common], help="Milnor degree or one invariant of a link file")
    p_mu.add_argument("file")
    p_mu.add_argument("--cap", type=int, default=None, help="truncation cap (default: valid_to)")
    p_mu.add_argument("--invariant", type=_invariant, default=None, help="index sequence, e.g. 231")
    p_mu.add_argument("--no-strict", action="store_true", help="skip the lower-degree vanishing check")
    p_mu.set_defaults(func=cmd_mu)

    p_hopf = sub.add_parser("hopf", parents=[common], help="iterated Bing doubles of the Hopf link")
    p_hopf.add_argument("--d", type=int, required=True)
    p_hopf.add_argument("--cap", type=int, default=None)
    p_hopf.add_argument("--surgery-framings", type=_int_list, default=None,
                        help="framings n0,...,nd: report the quantum bound for M(n0,...,nd)")
    p_hopf.add_argument("--p", type=int, default=5)
    p_hopf.set_defaults(func=cmd_hopf)

    p_form = sub.add_parser("linkform", parents=[common], help="linking forms")
    p_form.add_argument("mode", choices=("matrix", "cyclic"))
    p_form.add_argument("values", nargs="+", help="matrix file, or q n")
    action = p_form.add_mutually_exclusive_group()
    action.add_argument("--classify", action="store_true", help="simple / semisimple (default)")
    action.add_argument("--verdict", action="store_true", help="degree-one verdict only")
    action.add_argument("--split", type=_int_list, default=None, help="orders n1,n2,...")
    p_form.set_defaults(func=cmd_linkform)

    p_table = sub.add_parser("table1", parents=[common], help="non-semisimple cyclic linking forms")
    p_table.add_argument("--limit", type=int, default=None)
    p_table.add_argument("--workers", type=int, default=None, help="process pool size")
    p_table.set_defaults(func=cmd_table1)

    p_counts = sub.add_parser("counts", parents=[common], help="Witt and Milnor numbers")
    which = p_counts.add_mutually_exclusive_group(required=True)
    which.add_argument("--witt", type=int, nargs=2, metavar=("R", "K"))
    which.add_argument("--milnor", type=int, nargs=2, metavar=("R", "K"))
    which.add_argument("--verify-grid", type=int, nargs=2, metavar=("R", "K"))
    p_counts.set_defaults(func=cmd_counts)

    p_q = sub.add_parser("qbound", parents=[common], help="quantum p-order bounds")
    p_q.add_argument("--bp", type=int, default=None)
    p_q.add_argument("--ohat", type=_rational, default=None, help="rational, e.g. 3 or 5/2")
    p_q.add_argument("--p", type=int, default=5)
    p_q.add_argument("--plan", nargs=2, type=_degree, action=_PlanAction, metavar=("B", "D"),
                     default=None, help="realization recipe; D may be 'inf'")
    p_q.set_defaults(func=cmd_qbound)

    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run one command. Returns 0 on success, 1 on a domain error (or a
    failed grid check), 2 on a usage error.
    """
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    try:
        config = load_config(args.config)
        logger = setup_logger("src", config.server.log_level)
        records = args.func(args, config)
        fmt = args.format or config.output.default_format
        out.write(render(records, fmt))
    except (MilnorError, ValueError, ArithmeticError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    logger.info(f"{args.command}: {len(records)} record(s)")
    if any(getattr(r, "ok", True) is False for r in records):
        return 1
    return 0


def main() -> None:
    sys.exit(run())
