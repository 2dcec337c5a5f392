"""MCP server exposing the Milnor degree engines as tools."""

import asyncio
import signal
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from mcp.server.fastmcp import FastMCP

from .cli.linkfile import parse_link_file
from .cli.reports import (
    bound_record,
    degree_record,
    form_record,
    plan_record,
    table1_records,
)
from .config import load_config
from .counts.witt import milnor_number, witt
from .linkforms.forms import CyclicForm, form_split
from .qbounds.porder import QuantumData
from .qbounds.realization import realization_plan
from .utils.logger import get_logger, setup_logger

# Initialize MCP server
mcp = FastMCP("milnor-degree")

# Global state
config = None
logger = get_logger(__name__)


# =============================================================================
# 🔗 Links
# =============================================================================

@mcp.tool()
async def milnor_degree(link_text: str, cap: Optional[int] = None) -> dict:
    """
    🔗 Milnor degree of a link from its longitude words.

    ⚡ WHEN TO USE:
    - You have a link file (components / valid_to / longitude lines)
    - You need the first nonvanishing mu-bar invariant

    Args:
        link_text: Contents of a .mlnk link file
        cap: Truncation cap (default: the file's valid_to, else the configured default)

    Returns:
        Degree, whether it is exact, and the witness invariant
    """
    try:
        link = parse_link_file(link_text)
        default_cap = config.compute.default_cap if config else 6
        use_cap = cap or link.valid_to or default_cap
        logger.info(f"milnor_degree called: {link.components} components, cap={use_cap}")
        record = await asyncio.to_thread(degree_record, link, use_cap, "tool")
        return {"status": "success", **record.model_dump()}

    except Exception as e:
        logger.error(f"milnor_degree failed: {e}")
        return {"status": "failed", "error": str(e)}


# =============================================================================
# 📐 Linking forms
# =============================================================================

@mcp.tool()
async def classify_cyclic_form(q: int, n: int, split: Optional[str] = None) -> dict:
    """
    📐 Classify the linking form (q/n): simple, semisimple, degree-one verdict.

    Args:
        q: Self-linking numerator, prime to n
        n: Order of the cyclic group
        split: Optional comma-separated coprime orders to split the form along

    Returns:
        Canonical form, simple/semisimple flags, verdict and optional summands
    """
    try:
        form = CyclicForm(q, n)
        result = {"status": "success", **form_record(form).model_dump()}
        if split:
            orders = [int(x) for x in split.split(",")]
            result["summands"] = [str(f) for f in form_split(form, orders).summands]
        return result

    except Exception as e:
        logger.error(f"classify_cyclic_form failed: {e}")
        return {"status": "failed", "error": str(e)}


@mcp.tool()
async def non_semisimple_table(limit: int = 52) -> dict:
    """
    📐 Non-semisimple cyclic linking forms (+-q/n) for n <= limit,
    one smallest q per lens space L(n, q).

    Returns:
        rows: [{"n": ..., "representatives": [...]}, ...]
    """
    try:
        workers = config.compute.workers if config else 1
        rows = await asyncio.to_thread(table1_records, limit, workers)
        return {"status": "success", "limit": limit, "rows": [r.model_dump() for r in rows]}

    except Exception as e:
        logger.error(f"non_semisimple_table failed: {e}")
        return {"status": "failed", "error": str(e)}


# =============================================================================
# 🔢 Counts and bounds
# =============================================================================

@mcp.tool()
async def milnor_counts(r: int, k: int) -> dict:
    """
    🔢 Witt number N_k^r and Milnor number M_k^r = r N_k^r - N_{k+1}^r.
    """
    try:
        return {
            "status": "success",
            "r": r,
            "k": k,
            "witt": witt(r, k),
            "milnor": milnor_number(r, k),
        }

    except Exception as e:
        logger.error(f"milnor_counts failed: {e}")
        return {"status": "failed", "error": str(e)}


@mcp.tool()
async def quantum_bound(b_p: int, o_hat: str, p: int = 5) -> dict:
    """
    🔢 Upper bound (b_p + o_hat) / (b_p - o_hat) on the Milnor degree.

    Args:
        b_p: Mod-p first Betti number
        o_hat: Rescaled quantum p-order, a rational such as "3" or "5/2"
        p: Prime >= 5
    """
    try:
        record = bound_record(QuantumData(p=p, b_p=b_p, o_hat=Fraction(o_hat)))
        return {"status": "success", **record.model_dump()}

    except Exception as e:
        logger.error(f"quantum_bound failed: {e}")
        return {"status": "failed", "error": str(e)}


@mcp.tool()
async def realization(b: int, d: Optional[int] = None) -> dict:
    """
    🔢 Connected-sum recipe for a 3-manifold with Betti number b and Milnor degree d.

    Args:
        b: First Betti number
        d: Milnor degree; omit for infinite degree
    """
    try:
        record = plan_record(realization_plan(b, d))
        return {"status": "success", **record.model_dump()}

    except Exception as e:
        logger.error(f"realization failed: {e}")
        return {"status": "failed", "error": str(e)}


def main():
    """Main entry point for the MCP server."""
    global config, logger

    def signal_handler(signum, frame):
        logger.info(f"Received signal {signum}, shutting down...")
        sys.exit(0)

    signal.signal(signal.SIGINT, signal_handler)
    signal.signal(signal.SIGTERM, signal_handler)

    try:
        config = load_config()

        logger = setup_logger(__name__, config.server.log_level)
        logger.info(f"Starting {config.server.name} v{config.server.version}")
        logger.info(f"Current working directory: {Path.cwd()}")

        mcp.run(transport="stdio")

    except ValueError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        sys.exit(1)
    except Exception as e:
        print(f"Fatal error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
