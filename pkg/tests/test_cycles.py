"""Tests for small-cycle enumeration, exiting edges and the formula preconditions."""

from itertools import combinations, permutations
from typing import List

import networkx as nx
import pytest

from polarity.services.chem import build_benzenoid, parse_spec
from polarity.services.cycles import (
    TriangleError,
    build_inventory,
    canonical_cycle,
    check_preconditions,
    cycle_edges,
    enumerate_cycles,
    exiting_edge_count,
    exiting_pairs,
    f_of,
)
from polarity.utils.graph_core import Graph

from .conftest import cycle_graph


def brute_force_cycle_count(g: Graph, k: int) -> int:
    """Count k-cycles by testing every k-subset and every cyclic order of it."""
    total = 0
    for subset in combinations(sorted(g.vertices), k):
        first, rest = subset[0], subset[1:]
        for order in permutations(rest):
            if order[0] > order[-1]:
                continue
            sequence = (first,) + order
            if all(g.has_edge(sequence[i], sequence[(i + 1) % k]) for i in range(k)):
                total += 1
    return total


def networkx_cycle_count(g: Graph, k: int) -> int:
    return sum(1 for c in nx.simple_cycles(g.nx_graph, length_bound=k) if len(c) == k)


def small_graphs(corpus: List[Graph], max_order: int = 12, limit: int = 60) -> List[Graph]:
    return [g for g in corpus if g.order <= max_order][:limit]


class TestCanonicalCycle:
    def test_rotation_and_reflection_collapse(self):
        assert canonical_cycle([3, 1, 2]) == (1, 2, 3)
        assert canonical_cycle([2, 1, 3]) == (1, 2, 3)
        assert canonical_cycle([2, 5, 4, 0]) == (0, 2, 5, 4)
        assert canonical_cycle([0, 4, 5, 2]) == (0, 2, 5, 4)

    def test_edges_of_cycle(self):
        assert cycle_edges((0, 1, 2, 3)) == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})


class TestEnumerateCycles:
    def test_hexagon(self, c6):
        assert enumerate_cycles(c6, 6) == [(0, 1, 2, 3, 4, 5)]
        for k in (3, 4, 5):
            assert enumerate_cycles(c6, k) == []

    def test_complete_graph_k4(self, k4):
        assert len(enumerate_cycles(k4, 3)) == 4
        assert enumerate_cycles(k4, 4) == [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)]

    def test_k23_has_three_squares(self, k23):
        assert len(enumerate_cycles(k23, 4)) == 3

    def test_naphthalene_boundary_is_not_a_hexagon(self):
        naphthalene = build_benzenoid(parse_spec("0 -1 0\n1 0 0\n"))
        assert len(enumerate_cycles(naphthalene.graph, 6)) == 2

    def test_chorded_cycle_still_counts(self):
        # 6-cycle with the chord 0-3 splits into two 4-cycles
        g = Graph([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
        assert len(enumerate_cycles(g, 6)) == 1
        assert len(enumerate_cycles(g, 4)) == 2

    def test_output_is_sorted_and_canonical(self, k4):
        cycles = enumerate_cycles(k4, 4)
        assert cycles == sorted(cycles)
        assert all(canonical_cycle(c) == c for c in cycles)

    @pytest.mark.parametrize("k", [2, 7])
    def test_length_outside_range(self, c6, k):
        with pytest.raises(ValueError, match="cycle length"):
            enumerate_cycles(c6, k)

    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_matches_subset_oracle(self, precondition_corpus, k):
        for g in small_graphs(precondition_corpus):
            assert len(enumerate_cycles(g, k)) == brute_force_cycle_count(g, k)

    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_matches_networkx_on_dense_graphs(self, k4, k23, k):
        for g in (k4, k23, Graph.from_networkx(nx.petersen_graph()), Graph.from_networkx(nx.complete_graph(6))):
            assert len(enumerate_cycles(g, k)) == networkx_cycle_count(g, k)
            assert len(enumerate_cycles(g, k)) == brute_force_cycle_count(g, k)


class TestExitingEdges:
    def test_k23_square(self, k23):
        # square 0-2-1-3 leaves through 0-4 and 1-4
        assert exiting_edge_count(k23, (0, 2, 1, 3)) == 2

    def test_f_of_k23(self, k23):
        assert f_of(k23) == 6

    def test_f_of_graph_without_squares(self, c6):
        assert f_of(c6) == 0

    def test_rejects_non_cycle(self, k23):
        with pytest.raises(ValueError, match="not a 4-cycle"):
            exiting_edge_count(k23, (0, 1, 2, 3))
        with pytest.raises(ValueError, match="four distinct"):
            exiting_edge_count(k23, (0, 2, 0, 3))

    def test_triangles_refused(self, k4):
        with pytest.raises(TriangleError) as excinfo:
            f_of(k4)
        assert len(excinfo.value.triangle) == 3
        with pytest.raises(TriangleError):
            exiting_edge_count(k4, (0, 1, 2, 3))

    def test_definitional_count_equals_degree_identity(self, precondition_corpus):
        for g in precondition_corpus[:200]:
            assert exiting_pairs(g) == f_of(g)

    def test_definitional_count_on_triangles(self, k4):
        # every edge of K4 meets each square in two vertices
        assert exiting_pairs(k4) == 0


class TestPreconditions:
    def test_hexagon_passes(self, c6):
        report = check_preconditions(c6)
        assert report.passes
        assert report.triangle_free
        assert report.max_shared_edges_456 is None
        assert report.describe() == "all preconditions hold"

    def test_triangle_fails(self, k4):
        report = check_preconditions(k4)
        assert not report.passes
        assert report.triangle is not None
        assert "3-cycle" in report.describe()

    def test_k23_squares_share_two_edges(self, k23):
        report = check_preconditions(k23)
        assert not report.passes
        assert report.triangle_free
        assert report.max_shared_edges_44.shared_edges == 2
        assert report.max_shared_edges_456.shared_edges == 2
        assert "4-cycles" in report.describe()

    def test_shared_vertex_alone_is_not_an_overlap(self):
        # two squares glued at vertex 0
        g = Graph([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])
        report = check_preconditions(g)
        assert report.passes
        assert report.max_shared_edges_44.shared_edges == 0

    def test_inventory_counts(self, k23):
        inventory = build_inventory(k23)
        assert inventory.count(4) == 3
        assert inventory.f_value == 6
        assert inventory.triangle_free

    def test_disjoint_cycles_pass(self):
        g = Graph([*cycle_graph(6).edges, (5, 6), (6, 7), (7, 8), (8, 9), (9, 6)])
        assert check_preconditions(g).passes
