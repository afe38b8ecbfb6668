"""
Zagreb Indices and the Wiener Polarity Index
============================================

Degree-based indices and two independent routes to W_p, the number of
unordered vertex pairs at distance exactly three:

- wiener_polarity_oracle(): brute force over BFS distance rows
- wiener_polarity_formula(): M2 - M1 - f - 4|C4| - 5|C5| - 3|C6| + |E|,
  refused (PreconditionError) whenever check_preconditions() fails

All arithmetic is exact integer arithmetic.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..config import POLARITY_DISTANCE
from ..utils.graph_core import Graph, distances_from, validate_connected
from .cycles import CycleInventory, PreconditionReport, build_inventory, check_preconditions

logger = logging.getLogger(__name__)


class PreconditionError(ValueError):
    """The closed formula does not apply to this graph."""

    def __init__(self, report: PreconditionReport):
        self.report = report
        super().__init__(f"formula preconditions fail: {report.describe()}")


@dataclass(frozen=True)
class IndexReport:
    """All index values for one graph."""
    m1: int
    m2: int
    p3: int
    edge_count: int
    c3: int
    c4: int
    c5: int
    c6: int
    f: int
    wp_formula: Optional[int]
    wp_oracle: int
    preconditions_pass: bool
    wp_formula_reason: Optional[str] = None

    @property
    def consistent(self) -> bool:
        """Formula absent, or equal to the oracle."""
        return self.wp_formula is None or self.wp_formula == self.wp_oracle


# ============================================================================
# DEGREE-BASED INDICES
# ============================================================================

def first_zagreb(g: Graph) -> int:
    """M1: sum of squared degrees (0 for an edgeless graph)."""
    return sum(d * d for d in g.degrees().values())


def first_zagreb_by_edges(g: Graph) -> int:
    """M1 summed over edges as deg(u) + deg(v); equals first_zagreb on every graph."""
    degrees = g.degrees()
    return sum(degrees[u] + degrees[v] for u, v in g.edges)


def second_zagreb(g: Graph) -> int:
    """M2: sum over edges of deg(u) * deg(v)."""
    degrees = g.degrees()
    return sum(degrees[u] * degrees[v] for u, v in g.edges)


def path3_count(g: Graph) -> int:
    """
    Number of paths of length three, sum over edges of (deg(u) - 1)(deg(v) - 1).

    Equals M2 - M1 + |E|.
    """
    degrees = g.degrees()
    return sum((degrees[u] - 1) * (degrees[v] - 1) for u, v in g.edges)


# ============================================================================
# WIENER POLARITY
# ============================================================================

def wiener_polarity_oracle(g: Graph) -> int:
    """
    Count unordered pairs {u, v} with d(u, v) = 3 from per-source BFS rows.

    Raises:
        DisconnectedGraphError: g is disconnected
    """
    total = 0
    for source in sorted(g.vertices):
        row = distances_from(g, source)
        total += sum(1 for v, d in row.dist.items() if d == POLARITY_DISTANCE and v > source)
    return total


def overcount_decomposition(g: Graph, inventory: Optional[CycleInventory] = None) -> int:
    """
    p3 - f - 3|C6| - 4|C4| - 5|C5|.

    Paths of length three, minus the pairs joined by more than one such path
    and the pairs at distance one or two that such paths reach.
    """
    if inventory is None:
        inventory = build_inventory(g)
    return (
        path3_count(g)
        - inventory.f_value
        - 3 * inventory.count(6)
        - 4 * inventory.count(4)
        - 5 * inventory.count(5)
    )


def _formula_value(g: Graph, inventory: CycleInventory) -> int:
    return (
        second_zagreb(g)
        - first_zagreb(g)
        - inventory.f_value
        - 4 * inventory.count(4)
        - 5 * inventory.count(5)
        - 3 * inventory.count(6)
        + g.size
    )


def wiener_polarity_formula(g: Graph, inventory: Optional[CycleInventory] = None) -> int:
    """
    W_p by the Zagreb / small-cycle formula.

    Args:
        g: Graph satisfying check_preconditions
        inventory: Pre-computed cycle inventory (optional)

    Returns:
        M2 - M1 - f - 4|C4| - 5|C5| - 3|C6| + |E|

    Raises:
        PreconditionError: hypotheses fail; carries the PreconditionReport
    """
    if inventory is None:
        inventory = build_inventory(g)

    report = check_preconditions(g, inventory)
    if not report.passes:
        raise PreconditionError(report)

    return _formula_value(g, inventory)


def full_report(g: Graph) -> IndexReport:
    """
    Assemble every index for a connected graph.

    wp_formula is None (with wp_formula_reason) when the preconditions fail.
    """
    validate_connected(g)
    inventory = build_inventory(g)
    report = check_preconditions(g, inventory)

    wp_formula = _formula_value(g, inventory) if report.passes else None
    reason = None if report.passes else report.describe()

    result = IndexReport(
        m1=first_zagreb(g),
        m2=second_zagreb(g),
        p3=path3_count(g),
        edge_count=g.size,
        c3=inventory.count(3),
        c4=inventory.count(4),
        c5=inventory.count(5),
        c6=inventory.count(6),
        f=inventory.f_value,
        wp_formula=wp_formula,
        wp_oracle=wiener_polarity_oracle(g),
        preconditions_pass=report.passes,
        wp_formula_reason=reason,
    )

    if not result.consistent:
        logger.error(
            f"Formula/oracle mismatch on {g!r}: formula={result.wp_formula} oracle={result.wp_oracle}"
        )
    return result
