"""Graph, lattice and record utilities."""

from .graph_core import (
    DisconnectedGraphError,
    DistanceRow,
    Graph,
    GraphError,
    GraphParseError,
    degree_counts,
    distances_from,
    parse_edge_list,
    serialize_edge_list,
    validate_connected,
)
from .isomorphism import IsomorphismRegistry, invariant_hash, isomorphic, same_classes
from .records import format_block, parse_block, render

__all__ = [
    # Graph core
    "Graph",
    "GraphError",
    "GraphParseError",
    "DisconnectedGraphError",
    "DistanceRow",
    "parse_edge_list",
    "serialize_edge_list",
    "validate_connected",
    "distances_from",
    "degree_counts",
    # Isomorphism
    "IsomorphismRegistry",
    "invariant_hash",
    "isomorphic",
    "same_classes",
    # Records
    "format_block",
    "parse_block",
    "render",
]
