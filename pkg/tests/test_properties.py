"""Property-based tests for index identities and for grown catacondensed systems."""

import networkx as nx
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from polarity.services.chem import SystemKind, build_system, three_way_wiener_polarity
from polarity.services.cycles import build_inventory, check_preconditions, enumerate_cycles, exiting_pairs, f_of
from polarity.services.extremal import (
    ExtensionError,
    ExtensionKind,
    ExtensionStep,
    apply_extension,
    extension_placements,
    two_hexagon_seed,
)
from polarity.services.indices import (
    first_zagreb,
    first_zagreb_by_edges,
    path3_count,
    second_zagreb,
    wiener_polarity_formula,
    wiener_polarity_oracle,
)
from polarity.utils.graph_core import Graph, distances_from, parse_edge_list, serialize_edge_list

PROPERTY_SETTINGS = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def connected_graphs(draw: st.DrawFn, max_order: int = 12) -> Graph:
    """Random tree on n vertices plus a few extra edges."""
    n = draw(st.integers(min_value=2, max_value=max_order))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(min_value=0, max_value=v - 1)), v))
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if candidates:
        extra = draw(st.lists(st.sampled_from(candidates), unique=True, max_size=min(5, len(candidates))))
        edges.update(extra)
    return Graph(edges)


@st.composite
def grown_systems(draw: st.DrawFn):
    """A two-hexagon seed extended by a random sequence of single-hexagon steps."""
    kind = draw(st.sampled_from(list(SystemKind)))
    spec = two_hexagon_seed(kind)
    for _ in range(draw(st.integers(min_value=0, max_value=5))):
        terminals = [i for i in spec.ids() if spec.tree_degree(i) == 1]
        target = draw(st.sampled_from(terminals))
        step_kind = draw(st.sampled_from([ExtensionKind.EXT2, ExtensionKind.EXT3]))
        placement = draw(st.sampled_from(extension_placements(spec, target, step_kind)))
        try:
            spec = apply_extension(spec, ExtensionStep(step_kind, target, placement))
        except ExtensionError:
            continue
    return build_system(spec)


class TestIndexProperties:
    @PROPERTY_SETTINGS
    @given(g=connected_graphs())
    def test_zagreb_identities(self, g: Graph) -> None:
        assert first_zagreb_by_edges(g) == first_zagreb(g)
        assert path3_count(g) == second_zagreb(g) - first_zagreb(g) + g.size

    @PROPERTY_SETTINGS
    @given(g=connected_graphs())
    def test_oracle_matches_networkx(self, g: Graph) -> None:
        lengths = dict(nx.all_pairs_shortest_path_length(g.nx_graph))
        expected = sum(1 for u in g.vertices for v in g.vertices if u < v and lengths[u][v] == 3)
        assert wiener_polarity_oracle(g) == expected

    @PROPERTY_SETTINGS
    @given(g=connected_graphs())
    def test_formula_exact_whenever_preconditions_hold(self, g: Graph) -> None:
        inventory = build_inventory(g)
        if check_preconditions(g, inventory).passes:
            assert wiener_polarity_formula(g, inventory) == wiener_polarity_oracle(g)

    @PROPERTY_SETTINGS
    @given(g=connected_graphs())
    def test_exiting_pairs_match_degree_identity(self, g: Graph) -> None:
        if not enumerate_cycles(g, 3):
            assert exiting_pairs(g) == f_of(g)

    @PROPERTY_SETTINGS
    @given(g=connected_graphs())
    def test_edge_list_round_trip(self, g: Graph) -> None:
        assert parse_edge_list(serialize_edge_list(g)) == g


class TestDistanceProperties:
    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_order=30))
    def test_rows_are_consistent_along_edges(self, g: Graph) -> None:
        rows = {s: distances_from(g, s) for s in g.vertices}
        for s, row in rows.items():
            assert row.dist[s] == 0
            assert set(row.dist) == set(g.vertices)
            for u, v in g.edges:
                assert abs(row.dist[u] - row.dist[v]) <= 1
        for u in g.vertices:
            for v in g.vertices:
                assert rows[u].dist[v] == rows[v].dist[u]


class TestGrownSystems:
    @PROPERTY_SETTINGS
    @given(system=grown_systems())
    def test_three_way_agreement(self, system) -> None:
        assert three_way_wiener_polarity(system).agree

    @PROPERTY_SETTINGS
    @given(system=grown_systems())
    def test_segment_identities(self, system) -> None:
        profile = system.profile
        assert profile.segment_identities_hold()
        assert profile.b == 0
        assert profile.s <= system.h - 1
        assert profile.s == profile.a + 1
