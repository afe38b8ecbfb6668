"""Shared fixtures: small named graphs, blueprint texts and a random graph corpus."""

import random
from pathlib import Path
from typing import List

import networkx as nx
import pytest

from polarity.services.chem import PolycyclicSpec, SystemKind, parse_spec
from polarity.services.cycles import check_preconditions
from polarity.utils.graph_core import Graph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

CORPUS_SIZE = 500

FIGURE_SPEC_TEXT = """\
0 -1 0
1 0 0
2 1 0
3 0 2
4 3 1
5 0 4
"""


def cycle_graph(n: int) -> Graph:
    return Graph((i, (i + 1) % n) for i in range(n))


def path_graph(n: int) -> Graph:
    return Graph((i, i + 1) for i in range(n - 1))


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> Graph:
    """Random labelled tree (Pruefer sequence) plus extra random edges."""
    if n == 1:
        return Graph(vertices=[0])
    if n == 2:
        tree = nx.Graph([(0, 1)])
    else:
        tree = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not tree.has_edge(u, v)]
    rng.shuffle(missing)
    tree.add_edges_from(missing[:extra_edges])
    return Graph.from_networkx(tree)


def _build_corpus() -> List[Graph]:
    rng = random.Random(20240607)
    corpus = []
    attempts = 0
    while len(corpus) < CORPUS_SIZE and attempts < 50 * CORPUS_SIZE:
        attempts += 1
        n = rng.randint(4, 14)
        g = random_connected_graph(rng, n, rng.randint(0, 4))
        if check_preconditions(g).passes:
            corpus.append(g)
    return corpus


@pytest.fixture(scope="session")
def precondition_corpus() -> List[Graph]:
    """At least CORPUS_SIZE connected graphs (4..14 vertices) passing the formula preconditions."""
    return _build_corpus()


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def k23() -> Graph:
    return Graph([(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


@pytest.fixture
def k4() -> Graph:
    return Graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def figure_spec() -> PolycyclicSpec:
    """Six hexagons: three terminal, one branched, one angular, one linear; four segments."""
    return parse_spec(FIGURE_SPEC_TEXT)


@pytest.fixture
def figure_phenylene_spec() -> PolycyclicSpec:
    return parse_spec(FIGURE_SPEC_TEXT, SystemKind.PHENYLENE)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR
