"""
Small-Cycle Enumeration and Formula Preconditions
=================================================

Enumerates every simple k-cycle for k in 3..6, counts edges exiting
4-cycles, and checks the structural hypotheses under which the Zagreb
formula for the polarity index is exact:

- no 3-cycles
- any two distinct cycles of length 4, 5 or 6 share at most two edges
- any two distinct 4-cycles share at most one edge

Cycles are tuples of vertex ids in canonical order: lowest id first, then
the traversal direction whose second vertex is smaller. Chords are allowed;
a 6-cycle with a chord still counts as a 6-cycle.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..config import CYCLE_LENGTHS
from ..utils.graph_core import Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)

Cycle = Tuple[int, ...]


class TriangleError(ValueError):
    """Operation is only defined for triangle-free graphs."""

    def __init__(self, triangle: Cycle):
        self.triangle = triangle
        super().__init__(
            f"graph contains the 3-cycle {triangle}; exiting-edge counts by degree are only "
            f"valid on triangle-free graphs (see check_preconditions)"
        )


@dataclass(frozen=True)
class CycleInventory:
    """All 3..6-cycles of a graph and the exiting-pair count over its 4-cycles."""
    cycles_by_length: Dict[int, Tuple[Cycle, ...]]
    f_value: int

    def count(self, k: int) -> int:
        return len(self.cycles_by_length.get(k, ()))

    @property
    def triangle_free(self) -> bool:
        return self.count(3) == 0


@dataclass(frozen=True)
class CycleOverlap:
    """A pair of distinct cycles and the number of edges they share."""
    first: Cycle
    second: Cycle
    shared_edges: int


@dataclass(frozen=True)
class PreconditionReport:
    """Outcome of check_preconditions."""
    triangle_free: bool
    max_shared_edges_456: Optional[CycleOverlap]
    max_shared_edges_44: Optional[CycleOverlap]
    passes: bool
    triangle: Optional[Cycle] = None

    def describe(self) -> str:
        """One-line diagnostic naming every violated hypothesis."""
        if self.passes:
            return "all preconditions hold"

        problems = []
        if not self.triangle_free:
            problems.append(f"contains 3-cycle {self.triangle}")
        worst = self.max_shared_edges_456
        if worst is not None and worst.shared_edges > 2:
            problems.append(
                f"cycles {worst.first} and {worst.second} share {worst.shared_edges} edges (limit 2)"
            )
        worst = self.max_shared_edges_44
        if worst is not None and worst.shared_edges > 1:
            problems.append(
                f"4-cycles {worst.first} and {worst.second} share {worst.shared_edges} edges (limit 1)"
            )
        return "; ".join(problems)


# ============================================================================
# ENUMERATION
# ============================================================================

def canonical_cycle(sequence: Sequence[int]) -> Cycle:
    """
    Normal form of a cyclic vertex sequence under rotation and reflection.

    Examples:
        >>> canonical_cycle([3, 1, 2])
        (1, 2, 3)
        >>> canonical_cycle([2, 5, 4, 0])
        (0, 2, 5, 4)
    """
    k = len(sequence)
    start = min(range(k), key=lambda i: sequence[i])
    forward = tuple(sequence[(start + i) % k] for i in range(k))
    backward = (forward[0],) + tuple(reversed(forward[1:]))
    return min(forward, backward)


def cycle_edges(cycle: Cycle) -> FrozenSet[Edge]:
    """Edge set of a cycle."""
    k = len(cycle)
    return frozenset(normalize_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def _check_length(k: int) -> None:
    if k not in CYCLE_LENGTHS:
        raise ValueError(f"cycle length must be one of {CYCLE_LENGTHS}, got {k}")


def _cycles_through_root(g: Graph, root: int, k: int) -> List[Cycle]:
    """Cycles whose minimal vertex is root, each emitted once."""
    found = []
    path = [root]
    on_path = {root}

    def extend(v: int) -> None:
        if len(path) == k:
            # second < last kills the reflected duplicate
            if root in g.neighbors(v) and path[1] < path[-1]:
                found.append(tuple(path))
            return
        for w in sorted(g.neighbors(v)):
            if w > root and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(w)
                on_path.discard(w)
                path.pop()

    extend(root)
    return found


def enumerate_cycles(g: Graph, k: int) -> List[Cycle]:
    """
    All simple k-cycles of g in canonical form, sorted.

    Rooted depth-limited DFS from each vertex; a cycle is emitted only from
    its minimal vertex and only in the direction whose second vertex is
    smaller than the last, so rotations and reflections never repeat.

    Args:
        g: Graph
        k: Cycle length, 3..6

    Returns:
        Sorted list of canonical cycles

    Raises:
        ValueError: k outside 3..6
    """
    _check_length(k)
    cycles = []
    for root in sorted(g.vertices):
        cycles.extend(_cycles_through_root(g, root, k))
    cycles.sort()
    return cycles


def exiting_pairs(g: Graph, four_cycles: Optional[Sequence[Cycle]] = None) -> int:
    """
    Number of pairs (C, e) with C a 4-cycle and e sharing exactly one vertex with C.

    Counts edges directly, so it is defined on every graph.
    """
    if four_cycles is None:
        four_cycles = enumerate_cycles(g, 4)

    total = 0
    for cycle in four_cycles:
        members = set(cycle)
        total += sum(1 for u, v in g.edges if (u in members) != (v in members))
    return total


def build_inventory(g: Graph) -> CycleInventory:
    """Enumerate C3..C6 and count exiting pairs over C4."""
    cycles_by_length = {k: tuple(enumerate_cycles(g, k)) for k in CYCLE_LENGTHS}
    inventory = CycleInventory(
        cycles_by_length=cycles_by_length,
        f_value=exiting_pairs(g, cycles_by_length[4]),
    )
    logger.debug(
        "Cycle inventory: "
        + ", ".join(f"C{k}={inventory.count(k)}" for k in CYCLE_LENGTHS)
        + f", f={inventory.f_value}"
    )
    return inventory


# ============================================================================
# EXITING EDGES
# ============================================================================

def _require_triangle_free(g: Graph) -> None:
    triangles = enumerate_cycles(g, 3)
    if triangles:
        raise TriangleError(triangles[0])


def _degree_excess(g: Graph, cycle: Cycle) -> int:
    return sum(g.degree(v) for v in cycle) - 8


def exiting_edge_count(g: Graph, cycle: Sequence[int]) -> int:
    """
    Edges exiting a 4-cycle, by the degree-sum identity deg(u1)+...+deg(u4) - 8.

    Args:
        g: Triangle-free graph
        cycle: The four vertices of a 4-cycle of g, in cyclic order

    Raises:
        ValueError: cycle is not a 4-cycle of g
        TriangleError: g contains a 3-cycle
    """
    if len(cycle) != 4 or len(set(cycle)) != 4:
        raise ValueError(f"expected four distinct vertices, got {tuple(cycle)}")
    for i in range(4):
        if not g.has_edge(cycle[i], cycle[(i + 1) % 4]):
            raise ValueError(f"{tuple(cycle)} is not a 4-cycle of the graph")

    _require_triangle_free(g)
    return _degree_excess(g, tuple(cycle))


def f_of(g: Graph) -> int:
    """
    f(G): sum of exiting-edge counts over all 4-cycles (0 without 4-cycles).

    Raises:
        TriangleError: g contains a 3-cycle
    """
    _require_triangle_free(g)
    return sum(_degree_excess(g, c) for c in enumerate_cycles(g, 4))


# ============================================================================
# PRECONDITIONS
# ============================================================================

def _worst_overlap(cycles: Sequence[Cycle]) -> Optional[CycleOverlap]:
    edge_sets = [(c, cycle_edges(c)) for c in cycles]
    worst = None
    for (c1, e1), (c2, e2) in combinations(edge_sets, 2):
        shared = len(e1 & e2)
        if worst is None or shared > worst.shared_edges:
            worst = CycleOverlap(first=c1, second=c2, shared_edges=shared)
    return worst


def check_preconditions(g: Graph, inventory: Optional[CycleInventory] = None) -> PreconditionReport:
    """
    Check the hypotheses of the Zagreb formula for W_p.

    Shared edges are counted on edge sets; a shared vertex alone never counts.
    Violations are report content, never errors.
    """
    if inventory is None:
        inventory = build_inventory(g)

    triangles = inventory.cycles_by_length[3]
    small = inventory.cycles_by_length[4] + inventory.cycles_by_length[5] + inventory.cycles_by_length[6]
    worst_456 = _worst_overlap(small)
    worst_44 = _worst_overlap(inventory.cycles_by_length[4])

    passes = (
        not triangles
        and (worst_456 is None or worst_456.shared_edges <= 2)
        and (worst_44 is None or worst_44.shared_edges <= 1)
    )
    report = PreconditionReport(
        triangle_free=not triangles,
        max_shared_edges_456=worst_456,
        max_shared_edges_44=worst_44,
        passes=passes,
        triangle=triangles[0] if triangles else None,
    )
    if not passes:
        logger.debug(f"Preconditions fail: {report.describe()}")
    return report
