"""
Graph Core - Shared Graph Substrate
===================================

Single source of truth for graph representation, edge-list parsing,
connectivity validation and BFS distances. Every index computation,
cycle enumeration and benzenoid builder consumes the Graph defined here.

This module contains:
- Graph: immutable simple undirected graph over non-negative integer ids
- Edge-list parsing / serialization ('#' comments, blank lines ignored)
- Connectivity validation and single-source BFS distance rows
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Invalid graph or graph query."""


class GraphParseError(GraphError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class DisconnectedGraphError(GraphError):
    """Graph has more than one connected component."""

    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"graph is disconnected: vertices {u} and {v} lie in different components")


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge as a sorted pair."""
    return (u, v) if u < v else (v, u)


# ============================================================================
# GRAPH
# ============================================================================

class Graph:
    """
    Immutable simple undirected graph.

    Vertex ids are arbitrary non-negative integers (not necessarily
    contiguous). The underlying networkx graph is frozen after construction,
    so a Graph can be shared freely between readers.

    Args:
        edges: Iterable of (u, v) pairs
        vertices: Extra vertices to include (isolated ones, typically)

    Raises:
        GraphError: on negative ids, self-loops or duplicate edges
    """

    __slots__ = ("_graph", "_edges")

    def __init__(self, edges: Iterable[Tuple[int, int]] = (), vertices: Iterable[int] = ()):
        graph = nx.Graph()
        for v in vertices:
            _check_vertex_id(v)
            graph.add_node(v)

        for u, v in edges:
            _check_vertex_id(u)
            _check_vertex_id(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if graph.has_edge(u, v):
                raise GraphError(f"duplicate edge {normalize_edge(u, v)}")
            graph.add_edge(u, v)

        self._graph = nx.freeze(graph)
        self._edges = frozenset(normalize_edge(u, v) for u, v in graph.edges())

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Build from an undirected networkx graph with integer nodes."""
        return cls(graph.edges(), graph.nodes())

    @property
    def nx_graph(self) -> nx.Graph:
        """Frozen networkx view, for library algorithms."""
        return self._graph

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self._graph.nodes())

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self._edges

    @property
    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        return {v: frozenset(self._graph.adj[v]) for v in self._graph.nodes()}

    @property
    def order(self) -> int:
        return self._graph.number_of_nodes()

    @property
    def size(self) -> int:
        return self._graph.number_of_edges()

    def has_vertex(self, v: int) -> bool:
        return v in self._graph

    def has_edge(self, u: int, v: int) -> bool:
        return self._graph.has_edge(u, v)

    def neighbors(self, v: int) -> FrozenSet[int]:
        if v not in self._graph:
            raise GraphError(f"unknown vertex {v}")
        return frozenset(self._graph.adj[v])

    def degree(self, v: int) -> int:
        if v not in self._graph:
            raise GraphError(f"unknown vertex {v}")
        return self._graph.degree(v)

    def degrees(self) -> Dict[int, int]:
        return dict(self._graph.degree())

    def sorted_edges(self) -> list:
        return sorted(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def _check_vertex_id(v: int) -> None:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise GraphError(f"vertex ids must be non-negative integers, got {v!r}")


# ============================================================================
# EDGE-LIST FORMAT
# ============================================================================

def _parse_vertex(token: str, line_number: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise GraphParseError(f"expected a non-negative integer, got {token!r}", line_number)
    return int(token)


def parse_edge_list(text: str) -> Graph:
    """
    Parse the line-oriented edge-list format.

    Each non-comment line holds two whitespace-separated non-negative
    integers. A line with a single integer declares an isolated vertex.
    Lines starting with '#' and blank lines are ignored.

    Args:
        text: Edge-list text

    Returns:
        Graph on exactly the vertices mentioned

    Raises:
        GraphParseError: malformed line, self-loop or duplicate edge

    Examples:
        >>> parse_edge_list("0 1\\n1 2\\n2 3").size
        3
    """
    seen: Dict[Edge, int] = {}
    edges = []
    vertices = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        tokens = line.split()
        if len(tokens) == 1:
            vertices.append(_parse_vertex(tokens[0], line_number))
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected two vertex ids, got {len(tokens)} fields", line_number)

        u = _parse_vertex(tokens[0], line_number)
        v = _parse_vertex(tokens[1], line_number)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line_number)

        edge = normalize_edge(u, v)
        if edge in seen:
            raise GraphParseError(
                f"duplicate edge {u}-{v} (first given on line {seen[edge]})", line_number
            )
        seen[edge] = line_number
        edges.append(edge)

    graph = Graph(edges, vertices)
    logger.debug(f"Parsed edge list: {graph.order} vertices, {graph.size} edges")
    return graph


def serialize_edge_list(g: Graph) -> str:
    """
    Canonical edge-list text: sorted pairs, then isolated vertices.

    parse_edge_list(serialize_edge_list(g)) == g for every Graph.
    """
    lines = [f"{u} {v}" for u, v in g.sorted_edges()]
    lines.extend(str(v) for v in sorted(v for v in g.vertices if g.degree(v) == 0))
    return "\n".join(lines) + ("\n" if lines else "")


# ============================================================================
# CONNECTIVITY AND DISTANCES
# ============================================================================

@dataclass(frozen=True)
class DistanceRow:
    """Hop distances from one source vertex."""
    source: int
    dist: Mapping[int, int]

    def at(self, distance: int) -> list:
        """Vertices at exactly the given distance, sorted."""
        return sorted(v for v, d in self.dist.items() if d == distance)


def validate_connected(g: Graph) -> None:
    """
    Check that g is connected (a single vertex counts as connected).

    Raises:
        GraphError: graph has no vertices
        DisconnectedGraphError: names the smallest vertex of the first two components
    """
    if g.order == 0:
        raise GraphError("graph has no vertices")

    components = sorted((min(c) for c in nx.connected_components(g.nx_graph)))
    if len(components) > 1:
        raise DisconnectedGraphError(components[0], components[1])


def distances_from(g: Graph, source: int) -> DistanceRow:
    """
    Breadth-first hop distances from source to every vertex.

    Args:
        g: Connected graph
        source: Vertex id

    Returns:
        DistanceRow with dist[source] = 0

    Raises:
        GraphError: unknown source
        DisconnectedGraphError: some vertex is unreachable
    """
    if not g.has_vertex(source):
        raise GraphError(f"unknown source vertex {source}")

    dist = nx.single_source_shortest_path_length(g.nx_graph, source)
    if len(dist) != g.order:
        unreachable = min(v for v in g.vertices if v not in dist)
        raise DisconnectedGraphError(source, unreachable)

    return DistanceRow(source=source, dist=dict(dist))


def degree_counts(g: Graph) -> Dict[int, int]:
    """n_k(G): number of vertices of each degree k present in g."""
    return dict(sorted(Counter(g.degrees().values()).items()))
