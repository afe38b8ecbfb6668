"""
Catacondensed Benzenoids and Phenylenes
=======================================

Builds benzenoid graphs and phenylenes from dualist-tree blueprints placed
on the hexagonal lattice, classifies hexagons and evaluates the closed
formulas in h (hexagons), s (segments) and b (branched hexagons):

    benzenoid:  M1 = 26h - 2    M2 = 33h + s + b - 10   W_p = 9h + s + b - 7
    phenylene:  M1 = 44h - 20   M2 = 60h + s + b - 37   W_p = 13h + s + b - 11

Key functions:
- parse_spec(): read "id parent direction" lines into a PolycyclicSpec
- build_benzenoid() / build_phenylene(): lattice placement and vertex merging
- classify_hexagons(): terminal / branched / angular / linear, segments
- closed_form_report(): the closed formulas from a HexProfile

Blueprints that collide on the lattice (helicene-like systems of six or more
hexagons, for instance) are rejected even though they are valid abstract
catacondensed systems.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ..config import MIN_PHENYLENE_HEXAGONS
from ..utils import hex_lattice
from ..utils.graph_core import Graph, degree_counts, normalize_edge
from ..utils.hex_lattice import Cell, CornerKey
from .indices import wiener_polarity_formula, wiener_polarity_oracle

logger = logging.getLogger(__name__)

Face = Tuple[int, ...]


class SystemKind(str, Enum):
    BENZENOID = "benzenoid"
    PHENYLENE = "phenylene"


class HexagonClass(str, Enum):
    TERMINAL = "terminal"
    BRANCHED = "branched"
    ANGULAR = "angular"
    LINEAR = "linear"
    ISOLATED = "isolated"  # the lone hexagon of a one-hexagon system


class SpecError(ValueError):
    """Invalid dualist-tree blueprint."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class UnrealizableSpecError(SpecError):
    """Blueprint cannot be placed on the lattice as a catacondensed system."""

    def __init__(self, hexagon_ids: Tuple[int, ...], reason: str):
        self.hexagon_ids = hexagon_ids
        ids = ", ".join(str(i) for i in hexagon_ids)
        super().__init__(f"spec not realizable as catacondensed system: hexagons {ids} {reason}")


class ClosedFormError(ValueError):
    """Closed formulas requested outside their range."""


# ============================================================================
# DUALIST-TREE BLUEPRINT
# ============================================================================

@dataclass(frozen=True)
class HexagonNode:
    """One hexagon of a blueprint; direction points from the parent to this hexagon."""
    id: int
    parent: Optional[int]
    direction: int = 0


@dataclass(frozen=True)
class PolycyclicSpec:
    """Rooted dualist tree with lattice-direction labels."""
    nodes: Tuple[HexagonNode, ...]
    kind: SystemKind = SystemKind.BENZENOID

    @property
    def h(self) -> int:
        return len(self.nodes)

    @cached_property
    def _by_id(self) -> Dict[int, HexagonNode]:
        return {node.id: node for node in self.nodes}

    @cached_property
    def _children(self) -> Dict[int, List[HexagonNode]]:
        children: Dict[int, List[HexagonNode]] = {node.id: [] for node in self.nodes}
        for node in self.nodes:
            if node.parent is not None and node.parent in children:
                children[node.parent].append(node)
        return children

    @property
    def root(self) -> HexagonNode:
        return next(node for node in self.nodes if node.parent is None)

    def node(self, hexagon_id: int) -> HexagonNode:
        return self._by_id[hexagon_id]

    def ids(self) -> List[int]:
        return sorted(self._by_id)

    def children(self, hexagon_id: int) -> List[HexagonNode]:
        return list(self._children[hexagon_id])

    def neighbor_directions(self, hexagon_id: int) -> Dict[int, int]:
        """Direction from this hexagon to each of its tree neighbours."""
        node = self._by_id[hexagon_id]
        directions = {child.id: child.direction for child in self._children[hexagon_id]}
        if node.parent is not None:
            directions[node.parent] = hex_lattice.opposite(node.direction)
        return directions

    def tree_neighbors(self, hexagon_id: int) -> List[int]:
        return sorted(self.neighbor_directions(hexagon_id))

    def tree_degree(self, hexagon_id: int) -> int:
        return len(self.neighbor_directions(hexagon_id))

    def tree_edges(self) -> List[Tuple[int, int]]:
        return sorted(normalize_edge(n.id, n.parent) for n in self.nodes if n.parent is not None)

    def with_kind(self, kind: SystemKind) -> "PolycyclicSpec":
        return PolycyclicSpec(nodes=self.nodes, kind=kind)

    def to_text(self) -> str:
        """Blueprint in the parse_spec line format."""
        lines = [
            f"{n.id} {-1 if n.parent is None else n.parent} {n.direction}"
            for n in sorted(self.nodes, key=lambda n: n.id)
        ]
        return "\n".join(lines) + "\n"


def validate_spec(spec: PolycyclicSpec) -> None:
    """
    Check tree shape, tree degree <= 3 and distinct incident directions.

    Lattice realizability is checked separately by place_hexagons().

    Raises:
        SpecError: first violation found
    """
    if not spec.nodes:
        raise SpecError("spec has no hexagons")

    ids = Counter(node.id for node in spec.nodes)
    duplicates = sorted(i for i, count in ids.items() if count > 1)
    if duplicates:
        raise SpecError(f"duplicate hexagon id {duplicates[0]}")

    roots = [node.id for node in spec.nodes if node.parent is None]
    if len(roots) != 1:
        raise SpecError(f"expected exactly one root hexagon, found {len(roots)}")

    for node in spec.nodes:
        if node.parent is not None and node.parent not in ids:
            raise SpecError(f"hexagon {node.id} has unknown parent {node.parent}")
        if node.parent is not None and not 0 <= node.direction < hex_lattice.DIRECTION_COUNT:
            raise SpecError(f"hexagon {node.id} has direction {node.direction} outside 0..5")

    reached = {roots[0]}
    queue = deque([roots[0]])
    while queue:
        for child in spec.children(queue.popleft()):
            reached.add(child.id)
            queue.append(child.id)
    if len(reached) != spec.h:
        unreached = sorted(set(ids) - reached)
        raise SpecError(f"cycle in parent links through hexagon {unreached[0]}")

    for hexagon_id in spec.ids():
        node = spec.node(hexagon_id)
        directions = [c.direction for c in spec.children(hexagon_id)]
        if node.parent is not None:
            directions.append(hex_lattice.opposite(node.direction))
        if len(directions) > 3:
            raise SpecError(f"hexagon {hexagon_id} has {len(directions)} neighbours (at most 3)")
        if len(set(directions)) != len(directions):
            raise SpecError(f"hexagon {hexagon_id} uses a lattice direction twice")


def parse_spec(text: str, kind: SystemKind = SystemKind.BENZENOID) -> PolycyclicSpec:
    """
    Parse a blueprint: one "id parent direction" line per hexagon.

    The root has parent -1 and its direction is ignored. '#' comment lines
    and blank lines are skipped.

    Raises:
        SpecError: malformed line, duplicate id, bad direction, or an invalid tree
    """
    nodes = []
    seen: Dict[int, int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        tokens = line.split()
        if len(tokens) != 3:
            raise SpecError(f"expected 'id parent direction', got {line!r}", line_number)
        try:
            hexagon_id, parent, direction = (int(t) for t in tokens)
        except ValueError:
            raise SpecError(f"non-integer field in {line!r}", line_number) from None

        if hexagon_id < 0:
            raise SpecError(f"hexagon id must be non-negative, got {hexagon_id}", line_number)
        if hexagon_id in seen:
            raise SpecError(f"duplicate hexagon id {hexagon_id} (first on line {seen[hexagon_id]})", line_number)
        seen[hexagon_id] = line_number

        if parent == -1:
            nodes.append(HexagonNode(id=hexagon_id, parent=None, direction=0))
            continue
        if parent < 0:
            raise SpecError(f"parent must be -1 or a hexagon id, got {parent}", line_number)
        if not 0 <= direction < hex_lattice.DIRECTION_COUNT:
            raise SpecError(f"direction {direction} outside 0..5", line_number)
        nodes.append(HexagonNode(id=hexagon_id, parent=parent, direction=direction))

    spec = PolycyclicSpec(nodes=tuple(nodes), kind=kind)
    validate_spec(spec)
    return spec


# ============================================================================
# LATTICE PLACEMENT
# ============================================================================

def place_hexagons(spec: PolycyclicSpec) -> Dict[int, Cell]:
    """
    Place every hexagon on a lattice cell, root at the origin.

    Raises:
        UnrealizableSpecError: two hexagons on one cell, or two hexagons that
            are not tree neighbours sharing an edge
    """
    root = spec.root
    cells = {root.id: (0, 0)}
    occupant = {(0, 0): root.id}
    queue = deque([root.id])

    while queue:
        parent_id = queue.popleft()
        for child in sorted(spec.children(parent_id), key=lambda n: n.id):
            cell = hex_lattice.step(cells[parent_id], child.direction)
            if cell in occupant:
                raise UnrealizableSpecError((occupant[cell], child.id), "occupy the same lattice cell")
            cells[child.id] = cell
            occupant[cell] = child.id
            queue.append(child.id)

    tree = set(spec.tree_edges())
    for hexagon_id in spec.ids():
        for neighbour in hex_lattice.neighbors(cells[hexagon_id]):
            other = occupant.get(neighbour)
            if other is not None and normalize_edge(hexagon_id, other) not in tree:
                pair = normalize_edge(hexagon_id, other)
                raise UnrealizableSpecError(pair, "share an edge without being adjacent in the dualist tree")

    return cells


def spec_from_cells(cells: Iterable[Cell], kind: SystemKind = SystemKind.BENZENOID) -> PolycyclicSpec:
    """
    Blueprint for a set of cells whose adjacency graph is a tree.

    The smallest cell becomes hexagon 0; ids follow breadth-first order with
    neighbours visited by direction label.
    """
    cell_set = set(cells)
    if not cell_set:
        raise SpecError("no cells given")
    if len(hex_lattice.adjacency_pairs(cell_set)) != len(cell_set) - 1:
        raise SpecError("cell adjacency is not a tree")

    start = min(cell_set)
    ids = {start: 0}
    nodes = [HexagonNode(id=0, parent=None, direction=0)]
    queue = deque([start])
    while queue:
        cell = queue.popleft()
        for direction in range(hex_lattice.DIRECTION_COUNT):
            neighbour = hex_lattice.step(cell, direction)
            if neighbour in cell_set and neighbour not in ids:
                ids[neighbour] = len(ids)
                nodes.append(HexagonNode(id=ids[neighbour], parent=ids[cell], direction=direction))
                queue.append(neighbour)

    if len(ids) != len(cell_set):
        raise SpecError("cells are not connected")
    return PolycyclicSpec(nodes=tuple(nodes), kind=kind)


# ============================================================================
# BUILT SYSTEMS
# ============================================================================

@dataclass(frozen=True)
class HexProfile:
    """Per-system hexagon classification and counts."""
    h: int
    t: int
    b: int
    a: int
    l: int
    s: int
    n_i: int
    per_hexagon: Dict[int, HexagonClass]

    @property
    def segments_from_angles(self) -> int:
        """s recomputed as 2b + a + 1."""
        return 2 * self.b + self.a + 1

    def segment_identities_hold(self) -> bool:
        """2b + a = s - 1 and b + 2 = t (vacuous for a single hexagon)."""
        if self.h < 2:
            return True
        return self.segments_from_angles == self.s and self.b + 2 == self.t

    def counts(self) -> Dict[str, int]:
        return {"h": self.h, "t": self.t, "b": self.b, "a": self.a, "l": self.l, "s": self.s, "n_i": self.n_i}


@dataclass(frozen=True)
class BuiltSystem:
    """A benzenoid or phenylene graph together with its blueprint and faces."""
    spec: PolycyclicSpec
    graph: Graph
    profile: HexProfile
    hexagon_faces: Dict[int, Face]
    quadrilateral_faces: Tuple[Face, ...] = ()
    cells: Dict[int, Cell] = field(default_factory=dict)
    # minted phenylene vertex -> benzenoid vertex it was split from
    squeezed_ids: Dict[int, int] = field(default_factory=dict)

    @property
    def kind(self) -> SystemKind:
        return self.spec.kind

    @property
    def h(self) -> int:
        return self.spec.h

    def lattice_key(self) -> Tuple[Cell, ...]:
        return hex_lattice.canonical_shape(self.cells.values())


def _classify_spec(spec: PolycyclicSpec) -> Dict[int, HexagonClass]:
    if spec.h == 1:
        return {spec.root.id: HexagonClass.ISOLATED}

    classes = {}
    for hexagon_id in spec.ids():
        directions = list(spec.neighbor_directions(hexagon_id).values())
        if len(directions) == 1:
            classes[hexagon_id] = HexagonClass.TERMINAL
        elif len(directions) == 3:
            classes[hexagon_id] = HexagonClass.BRANCHED
        elif (directions[0] - directions[1]) % hex_lattice.DIRECTION_COUNT == 3:
            classes[hexagon_id] = HexagonClass.LINEAR
        else:
            classes[hexagon_id] = HexagonClass.ANGULAR
    return classes


def _count_segments(spec: PolycyclicSpec, classes: Mapping[int, HexagonClass]) -> int:
    """Maximal linear chains: walks between non-linear hexagons through linear ones."""
    if spec.h == 1:
        return 1

    walks = 0
    for start in spec.ids():
        if classes[start] == HexagonClass.LINEAR:
            continue
        for first in spec.tree_neighbors(start):
            previous, current = start, first
            while classes[current] == HexagonClass.LINEAR:
                onward = [n for n in spec.tree_neighbors(current) if n != previous]
                previous, current = current, onward[0]
            walks += 1
    # every segment is walked once from each end
    return walks // 2


def _internal_vertex_count(faces: Iterable[Face]) -> int:
    multiplicity = Counter(v for face in faces for v in face)
    return sum(1 for count in multiplicity.values() if count >= 3)


def _profile(spec: PolycyclicSpec, hexagon_faces: Mapping[int, Face]) -> HexProfile:
    classes = _classify_spec(spec)
    tally = Counter(classes.values())
    return HexProfile(
        h=spec.h,
        t=tally[HexagonClass.TERMINAL],
        b=tally[HexagonClass.BRANCHED],
        a=tally[HexagonClass.ANGULAR],
        l=tally[HexagonClass.LINEAR],
        s=_count_segments(spec, classes),
        n_i=_internal_vertex_count(hexagon_faces.values()),
        per_hexagon=classes,
    )


def _number_corners(spec: PolycyclicSpec, cells: Mapping[int, Cell]) -> Tuple[Dict[CornerKey, int], Dict[int, Tuple[CornerKey, ...]]]:
    """Vertex id per corner key, in order of hexagon id then corner index."""
    vertex_ids: Dict[CornerKey, int] = {}
    face_keys = {}
    for hexagon_id in spec.ids():
        keys = tuple(hex_lattice.corner_keys(cells[hexagon_id]))
        face_keys[hexagon_id] = keys
        for key in keys:
            vertex_ids.setdefault(key, len(vertex_ids))
    return vertex_ids, face_keys


def _face_edges(face: Face) -> List[Tuple[int, int]]:
    return [normalize_edge(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


def build_benzenoid(spec: PolycyclicSpec) -> BuiltSystem:
    """
    Catacondensed benzenoid graph for a blueprint.

    Hexagons sit on the lattice cells their directions lead to; corners shared
    by adjacent hexagons merge through equal lattice keys, so adjacent
    hexagons share exactly one edge.

    Raises:
        SpecError: blueprint is not of kind benzenoid
        UnrealizableSpecError: lattice collision or accidental adjacency
    """
    if spec.kind != SystemKind.BENZENOID:
        raise SpecError(f"build_benzenoid needs a benzenoid spec, got {spec.kind.value}")
    validate_spec(spec)

    cells = place_hexagons(spec)
    vertex_ids, face_keys = _number_corners(spec, cells)
    faces = {i: tuple(vertex_ids[k] for k in keys) for i, keys in face_keys.items()}
    edges = sorted({e for face in faces.values() for e in _face_edges(face)})

    system = BuiltSystem(
        spec=spec,
        graph=Graph(edges),
        profile=_profile(spec, faces),
        hexagon_faces=faces,
        cells=cells,
    )
    logger.debug(f"Built benzenoid h={spec.h}: |V|={system.graph.order} |E|={system.graph.size}")
    return system


def build_phenylene(spec: PolycyclicSpec) -> BuiltSystem:
    """
    Phenylene for a blueprint: a quadrilateral between every pair of adjacent hexagons.

    Each shared edge (u, v) of the benzenoid is split into copies (u1, v1) and
    (u2, v2) joined by rungs u1u2 and v1v2. The endpoints' benzenoid ids are
    retired; four fresh ids are minted per adjacency, in order of the
    hexagon-id pair.

    Raises:
        SpecError: wrong kind or fewer than two hexagons
        UnrealizableSpecError: lattice collision or accidental adjacency
    """
    if spec.kind != SystemKind.PHENYLENE:
        raise SpecError(f"build_phenylene needs a phenylene spec, got {spec.kind.value}")
    if spec.h < MIN_PHENYLENE_HEXAGONS:
        raise SpecError(f"a phenylene needs at least {MIN_PHENYLENE_HEXAGONS} hexagons, got {spec.h}")
    validate_spec(spec)

    cells = place_hexagons(spec)
    vertex_ids, face_keys = _number_corners(spec, cells)

    next_id = len(vertex_ids)
    minted: Dict[Tuple[int, CornerKey], int] = {}
    squeezed: Dict[int, int] = {}
    quadrilaterals = []
    rungs = []

    for first, second in spec.tree_edges():
        direction = hex_lattice.direction_between(cells[first], cells[second])
        j1, j2 = hex_lattice.shared_side(direction)
        k1, k2 = face_keys[first][j1], face_keys[first][j2]
        for hexagon_id in (first, second):
            for key in (k1, k2):
                minted[(hexagon_id, key)] = next_id
                squeezed[next_id] = vertex_ids[key]
                next_id += 1
        quadrilaterals.append((
            minted[(first, k1)], minted[(first, k2)], minted[(second, k2)], minted[(second, k1)],
        ))
        rungs.append(normalize_edge(minted[(first, k1)], minted[(second, k1)]))
        rungs.append(normalize_edge(minted[(first, k2)], minted[(second, k2)]))

    faces = {
        i: tuple(minted.get((i, key), vertex_ids[key]) for key in keys)
        for i, keys in face_keys.items()
    }
    edges = sorted({e for face in faces.values() for e in _face_edges(face)} | set(rungs))

    system = BuiltSystem(
        spec=spec,
        graph=Graph(edges),
        profile=_profile(spec, faces),
        hexagon_faces=faces,
        quadrilateral_faces=tuple(quadrilaterals),
        cells=cells,
        squeezed_ids=squeezed,
    )
    logger.debug(f"Built phenylene h={spec.h}: |V|={system.graph.order} |E|={system.graph.size}")
    return system


def build_system(spec: PolycyclicSpec) -> BuiltSystem:
    """Build according to spec.kind."""
    if spec.kind == SystemKind.PHENYLENE:
        return build_phenylene(spec)
    return build_benzenoid(spec)


def hexagonal_squeeze(system: BuiltSystem) -> BuiltSystem:
    """
    Contract every quadrilateral of a phenylene back into a shared edge.

    Minted vertices map back to the ids they were split from, so the result
    equals build_benzenoid() of the same blueprint vertex for vertex.
    """
    if system.kind != SystemKind.PHENYLENE:
        raise ValueError("hexagonal squeeze is defined for phenylenes only")

    remap = system.squeezed_ids
    edges = set()
    for u, v in system.graph.edges:
        u, v = remap.get(u, u), remap.get(v, v)
        if u != v:
            edges.add(normalize_edge(u, v))

    faces = {i: tuple(remap.get(v, v) for v in face) for i, face in system.hexagon_faces.items()}
    spec = system.spec.with_kind(SystemKind.BENZENOID)
    return BuiltSystem(
        spec=spec,
        graph=Graph(sorted(edges)),
        profile=_profile(spec, faces),
        hexagon_faces=faces,
        cells=dict(system.cells),
    )


# ============================================================================
# CLASSIFICATION AND COUNTS
# ============================================================================

def classify_hexagons(system: BuiltSystem) -> HexProfile:
    """
    Hexagon classes from dualist-tree degrees and directions.

    degree 1 -> terminal, 3 -> branched, 2 -> linear when the two neighbour
    directions are opposite, angular otherwise. Segments are counted directly
    from maximal linear chains.
    """
    return _profile(system.spec, system.hexagon_faces)


def classify_faces(system: BuiltSystem) -> Dict[int, HexagonClass]:
    """
    Hexagon classes read off the graph itself.

    Counts the inner faces sharing an edge with each hexagon; with two such
    faces, the hexagon is angular when its two degree-two vertices are
    adjacent and linear when they are not.
    """
    graph = system.graph
    face_edges = {("hexagon", i): set(_face_edges(f)) for i, f in system.hexagon_faces.items()}
    for index, quad in enumerate(system.quadrilateral_faces):
        face_edges[("quadrilateral", index)] = set(_face_edges(quad))

    classes = {}
    for hexagon_id, face in system.hexagon_faces.items():
        own = face_edges[("hexagon", hexagon_id)]
        touching = sum(
            1 for key, edges in face_edges.items()
            if key != ("hexagon", hexagon_id) and own & edges
        )
        if touching == 0:
            classes[hexagon_id] = HexagonClass.ISOLATED
        elif touching == 1:
            classes[hexagon_id] = HexagonClass.TERMINAL
        elif touching == 3:
            classes[hexagon_id] = HexagonClass.BRANCHED
        else:
            free = [v for v in face if graph.degree(v) == 2]
            if len(free) != 2:
                raise ValueError(f"hexagon {hexagon_id} has {len(free)} degree-two vertices, expected 2")
            adjacent = graph.has_edge(free[0], free[1])
            classes[hexagon_id] = HexagonClass.ANGULAR if adjacent else HexagonClass.LINEAR
    return classes


@dataclass(frozen=True)
class StructuralCounts:
    """|V|, |E|, degree-two and degree-three vertex counts, internal vertices."""
    vertices: int
    edges: int
    n2: int
    n3: int
    n_i: int


def structural_counts(system: BuiltSystem) -> StructuralCounts:
    """Counts measured on the built graph."""
    degrees = degree_counts(system.graph)
    return StructuralCounts(
        vertices=system.graph.order,
        edges=system.graph.size,
        n2=degrees.get(2, 0),
        n3=degrees.get(3, 0),
        n_i=system.profile.n_i,
    )


def expected_counts(kind: SystemKind, h: int, n_i: int = 0) -> StructuralCounts:
    """Counts predicted from h (and n_i for benzenoids)."""
    if kind == SystemKind.PHENYLENE:
        return StructuralCounts(vertices=6 * h, edges=8 * h - 2, n2=2 * h + 4, n3=4 * h - 4, n_i=0)
    return StructuralCounts(
        vertices=4 * h + 2 - n_i,
        edges=5 * h + 1 - n_i,
        n2=2 * h + 4 - n_i,
        n3=2 * h - 2,
        n_i=n_i,
    )


# ============================================================================
# CLOSED FORMULAS
# ============================================================================

@dataclass(frozen=True)
class ClosedForms:
    m1: int
    m2: int
    wp: int


def closed_form_report(profile: HexProfile, kind: SystemKind) -> ClosedForms:
    """
    M1, M2 and W_p from h, s and b.

    Raises:
        ClosedFormError: h < 1 for benzenoids, h < 2 for phenylenes
    """
    h, s, b = profile.h, profile.s, profile.b
    if kind == SystemKind.PHENYLENE:
        if h < MIN_PHENYLENE_HEXAGONS:
            raise ClosedFormError(f"phenylene closed forms need h >= {MIN_PHENYLENE_HEXAGONS}, got {h}")
        return ClosedForms(m1=44 * h - 20, m2=60 * h + s + b - 37, wp=13 * h + s + b - 11)

    if h < 1:
        raise ClosedFormError(f"benzenoid closed forms need h >= 1, got {h}")
    return ClosedForms(m1=26 * h - 2, m2=33 * h + s + b - 10, wp=9 * h + s + b - 7)


@dataclass(frozen=True)
class ThreeWayValues:
    """W_p of one system by closed form, generic formula and BFS oracle."""
    closed_form: int
    formula: int
    oracle: int

    @property
    def agree(self) -> bool:
        return self.closed_form == self.formula == self.oracle


def three_way_wiener_polarity(system: BuiltSystem) -> ThreeWayValues:
    """
    Raises:
        PreconditionError: the built graph fails the formula hypotheses
    """
    values = ThreeWayValues(
        closed_form=closed_form_report(system.profile, system.kind).wp,
        formula=wiener_polarity_formula(system.graph),
        oracle=wiener_polarity_oracle(system.graph),
    )
    if not values.agree:
        logger.warning(
            f"W_p disagreement for {system.kind.value} h={system.h}: "
            f"closed={values.closed_form} formula={values.formula} oracle={values.oracle}"
        )
    return values


def system_metadata(system: BuiltSystem) -> Dict[str, str]:
    """Key/value description of a system: counts, hexagon classes and faces."""
    counts = structural_counts(system)
    meta = {"kind": system.kind.value}
    meta.update({k: str(v) for k, v in system.profile.counts().items()})
    meta.update({
        "vertices": str(counts.vertices),
        "edges": str(counts.edges),
        "n2": str(counts.n2),
        "n3": str(counts.n3),
    })
    for hexagon_id in sorted(system.hexagon_faces):
        face = " ".join(str(v) for v in system.hexagon_faces[hexagon_id])
        meta[f"hexagon.{hexagon_id}"] = f"{system.profile.per_hexagon[hexagon_id].value}: {face}"
    for index, quad in enumerate(system.quadrilateral_faces):
        meta[f"quadrilateral.{index}"] = " ".join(str(v) for v in quad)
    return meta
