"""
Isomorphism-class registry for small graphs.

Graphs are bucketed by their Weisfeiler-Lehman hash; membership inside a
bucket is decided exactly with VF2 (networkx.is_isomorphic).
"""

import logging
import threading
from typing import Dict, Generic, Iterable, List, Optional, Tuple, TypeVar

import networkx as nx

from .graph_core import Graph

logger = logging.getLogger(__name__)

T = TypeVar("T")

WL_ITERATIONS = 4


def invariant_hash(g: Graph) -> str:
    """Isomorphism-invariant hash (equal for isomorphic graphs, rarely equal otherwise)."""
    return nx.weisfeiler_lehman_graph_hash(g.nx_graph, iterations=WL_ITERATIONS)


def isomorphic(a: Graph, b: Graph) -> bool:
    if a.order != b.order or a.size != b.size:
        return False
    return nx.is_isomorphic(a.nx_graph, b.nx_graph)


class IsomorphismRegistry(Generic[T]):
    """
    Keeps one representative item per isomorphism class of its graph.

    Usage:
        registry = IsomorphismRegistry()
        if registry.add(system.graph, system):
            ...  # first of its class
    """

    def __init__(self):
        self._buckets: Dict[str, List[Tuple[Graph, T]]] = {}
        self._lock = threading.Lock()
        self._count = 0

    def _match(self, g: Graph) -> Optional[Tuple[Graph, T]]:
        with self._lock:
            bucket = list(self._buckets.get(invariant_hash(g), []))
        for entry in bucket:
            if isomorphic(g, entry[0]):
                return entry
        return None

    def find(self, g: Graph) -> Optional[T]:
        """Representative isomorphic to g, or None."""
        entry = self._match(g)
        return None if entry is None else entry[1]

    def add(self, g: Graph, item: T) -> bool:
        """Register item under g's class. Returns False if the class was already present."""
        key = invariant_hash(g)
        with self._lock:
            bucket = self._buckets.setdefault(key, [])
            for other, _ in bucket:
                if isomorphic(g, other):
                    return False
            bucket.append((g, item))
            self._count += 1
            return True

    def __contains__(self, g: Graph) -> bool:
        return self._match(g) is not None

    def __len__(self) -> int:
        return self._count

    def items(self) -> List[T]:
        with self._lock:
            return [item for bucket in self._buckets.values() for _, item in bucket]

    def graphs(self) -> List[Graph]:
        with self._lock:
            return [g for bucket in self._buckets.values() for g, _ in bucket]


def same_classes(first: Iterable[Graph], second: Iterable[Graph]) -> bool:
    """True when both collections cover exactly the same isomorphism classes."""
    left: IsomorphismRegistry[None] = IsomorphismRegistry()
    right: IsomorphismRegistry[None] = IsomorphismRegistry()
    for g in first:
        left.add(g, None)
    for g in second:
        right.add(g, None)

    if len(left) != len(right):
        return False
    return all(g in right for g in left.graphs())
