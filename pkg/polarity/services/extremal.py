"""
Extremal Catacondensed Systems
==============================

Generates linear chains and the extremal families by extensions of terminal
hexagons, enumerates every lattice-realizable catacondensed system of h
hexagons, and checks the extremal statements against the enumeration:

- the minimum W_p is attained only by the linear chain L_h
- the maximum W_p is attained exactly by B_h (benzenoids) / P_h (phenylenes)
- for odd h the B'_h / P'_h members reach the maximal b but fall short on s

Extensions act on a terminal hexagon whose single neighbour lies in
direction p:

    ext1: two new hexagons at p+2 and p+4  (target becomes branched)
    ext2: one new hexagon at p+2 or p+4    (target becomes angular)
    ext3: one new hexagon at p+3           (target becomes linear)
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from ..config import MIN_PHENYLENE_HEXAGONS, settings
from ..utils import hex_lattice
from ..utils.hex_lattice import Cell
from ..utils.isomorphism import IsomorphismRegistry, isomorphic, same_classes
from .chem import (
    BuiltSystem,
    HexagonNode,
    PolycyclicSpec,
    SpecError,
    SystemKind,
    UnrealizableSpecError,
    build_system,
    classify_faces,
    closed_form_report,
    expected_counts,
    place_hexagons,
    spec_from_cells,
    structural_counts,
    three_way_wiener_polarity,
)
from .cycles import build_inventory
from .indices import PreconditionError, first_zagreb, second_zagreb, wiener_polarity_oracle

logger = logging.getLogger(__name__)


class ExtensionError(ValueError):
    """Extension step cannot be applied to this blueprint."""


class EnumerationGuardError(ValueError):
    """Exhaustive enumeration requested beyond the configured hexagon limit."""


class ExtensionKind(str, Enum):
    EXT1 = "ext1"
    EXT2 = "ext2"
    EXT3 = "ext3"

    @property
    def added_hexagons(self) -> int:
        return 2 if self == ExtensionKind.EXT1 else 1


class Family(str, Enum):
    L = "L"
    B = "B"
    B_PRIME = "B_prime"
    P = "P"
    P_PRIME = "P_prime"
    OTHER = "other"


_FAMILY_KIND = {
    Family.B: SystemKind.BENZENOID,
    Family.B_PRIME: SystemKind.BENZENOID,
    Family.P: SystemKind.PHENYLENE,
    Family.P_PRIME: SystemKind.PHENYLENE,
}


@dataclass(frozen=True)
class ExtensionStep:
    kind: ExtensionKind
    target: int
    placement: Tuple[int, ...]  # absolute lattice directions, one per new hexagon


@dataclass(frozen=True)
class FamilyTag:
    """A family together with its hexagon count; parity is checked on construction."""
    family: Family
    h: int

    def __post_init__(self):
        if self.family == Family.OTHER:
            return
        if self.family == Family.L:
            if self.h < 1:
                raise ValueError(f"L_h needs h >= 1, got {self.h}")
            return
        if self.h < 2:
            raise ValueError(f"{self.family.value}_h needs h >= 2, got {self.h}")
        if self.family in (Family.B_PRIME, Family.P_PRIME) and self.h % 2 == 0:
            raise ValueError(f"{self.family.value}_h is defined for odd h only, got {self.h}")

    @property
    def kind(self) -> Optional[SystemKind]:
        return _FAMILY_KIND.get(self.family)

    @property
    def ext1_steps(self) -> int:
        return self.h // 2 - 1

    @property
    def single_step(self) -> Optional[ExtensionKind]:
        """The one extra ext2 / ext3 step for odd h, None for even h."""
        if self.h % 2 == 0:
            return None
        if self.family in (Family.B_PRIME, Family.P_PRIME):
            return ExtensionKind.EXT3
        return ExtensionKind.EXT2


# ============================================================================
# EXTENSIONS
# ============================================================================

def extension_placements(spec: PolycyclicSpec, target: int, kind: ExtensionKind) -> List[Tuple[int, ...]]:
    """
    Admissible direction tuples for an extension of a terminal hexagon.

    Raises:
        ExtensionError: target missing or not terminal
    """
    try:
        neighbours = spec.neighbor_directions(target)
    except KeyError:
        raise ExtensionError(f"hexagon {target} is not in the blueprint") from None
    if len(neighbours) != 1:
        raise ExtensionError(f"hexagon {target} is not terminal (tree degree {len(neighbours)})")

    p = next(iter(neighbours.values()))
    n = hex_lattice.DIRECTION_COUNT
    if kind == ExtensionKind.EXT1:
        return [((p + 2) % n, (p + 4) % n)]
    if kind == ExtensionKind.EXT2:
        return [((p + 2) % n,), ((p + 4) % n,)]
    return [((p + 3) % n,)]


def apply_extension(spec: PolycyclicSpec, step: ExtensionStep) -> PolycyclicSpec:
    """
    Attach new hexagons to a terminal hexagon.

    New hexagons get ids max(id)+1, max(id)+2 in placement order.

    Raises:
        ExtensionError: target not terminal, placement not admissible for the
            step kind, or result not realizable on the lattice
    """
    allowed = extension_placements(spec, step.target, step.kind)
    if tuple(step.placement) not in allowed:
        raise ExtensionError(
            f"placement {tuple(step.placement)} not admissible for {step.kind.value} on hexagon "
            f"{step.target} (allowed: {allowed})"
        )

    next_id = max(spec.ids()) + 1
    added = tuple(
        HexagonNode(id=next_id + i, parent=step.target, direction=direction)
        for i, direction in enumerate(step.placement)
    )
    extended = PolycyclicSpec(nodes=spec.nodes + added, kind=spec.kind)
    try:
        place_hexagons(extended)
    except UnrealizableSpecError as exc:
        raise ExtensionError(f"{step.kind.value} on hexagon {step.target}: {exc}") from exc
    return extended


def _all_steps(spec: PolycyclicSpec, kind: ExtensionKind) -> List[ExtensionStep]:
    steps = []
    for target in spec.ids():
        if spec.tree_degree(target) != 1:
            continue
        for placement in extension_placements(spec, target, kind):
            steps.append(ExtensionStep(kind=kind, target=target, placement=placement))
    return steps


# ============================================================================
# FAMILIES
# ============================================================================

def two_hexagon_seed(kind: SystemKind = SystemKind.BENZENOID) -> PolycyclicSpec:
    """Two fused hexagons (naphthalene / biphenylene blueprint)."""
    return PolycyclicSpec(
        nodes=(HexagonNode(0, None, 0), HexagonNode(1, 0, 0)),
        kind=kind,
    )


def linear_chain(h: int, kind: SystemKind = SystemKind.BENZENOID) -> BuiltSystem:
    """
    L_h: h hexagons in a straight row.

    Raises:
        ValueError: h < 1, or h < 2 for a phenylene
    """
    minimum = MIN_PHENYLENE_HEXAGONS if kind == SystemKind.PHENYLENE else 1
    if h < minimum:
        raise ValueError(f"linear {kind.value} chain needs h >= {minimum}, got {h}")
    nodes = [HexagonNode(0, None, 0)] + [HexagonNode(i, i - 1, 0) for i in range(1, h)]
    return build_system(PolycyclicSpec(nodes=tuple(nodes), kind=kind))


def _lattice_key(spec: PolycyclicSpec) -> Tuple[Cell, ...]:
    return hex_lattice.canonical_shape(place_hexagons(spec).values())


def generate_family(h: int, family: Family, kind: Optional[SystemKind] = None) -> List[BuiltSystem]:
    """
    All lattice-realizable members of a family, one per isomorphism class.

    Explores every order of the extension steps, every terminal target and
    every placement starting from the two-hexagon seed. Blueprints reaching
    the same lattice shape with the same remaining steps are merged as they
    are generated; the final members are deduplicated by graph isomorphism
    and returned in lattice-key order.

    Args:
        h: Number of hexagons
        family: L, B, B_prime, P or P_prime
        kind: Required for L; must agree with the family otherwise

    Raises:
        ValueError: parity or range mismatch, or a missing / conflicting kind
    """
    tag = FamilyTag(family=family, h=h)
    if family == Family.OTHER:
        raise ValueError("the 'other' family cannot be generated")
    if family == Family.L:
        if kind is None:
            raise ValueError("generate_family(L) needs a system kind")
        return [linear_chain(h, kind)]
    if kind is not None and kind != tag.kind:
        raise ValueError(f"family {family.value} is a {tag.kind.value} family, not {kind.value}")
    kind = tag.kind

    start = (two_hexagon_seed(kind), tag.ext1_steps, tag.single_step)
    frontier = [start]
    finished: Dict[Tuple[Cell, ...], PolycyclicSpec] = {}

    while frontier:
        seen: Set[Tuple[Tuple[Cell, ...], int, Optional[ExtensionKind]]] = set()
        next_frontier = []
        for spec, ext1_left, single in frontier:
            if ext1_left == 0 and single is None:
                finished.setdefault(_lattice_key(spec), spec)
                continue

            moves = []
            if ext1_left > 0:
                moves += [(s, ext1_left - 1, single) for s in _all_steps(spec, ExtensionKind.EXT1)]
            if single is not None:
                moves += [(s, ext1_left, None) for s in _all_steps(spec, single)]

            for step, ext1_after, single_after in moves:
                try:
                    extended = apply_extension(spec, step)
                except ExtensionError:
                    continue
                key = (_lattice_key(extended), ext1_after, single_after)
                if key not in seen:
                    seen.add(key)
                    next_frontier.append((extended, ext1_after, single_after))
        frontier = next_frontier

    registry: IsomorphismRegistry[BuiltSystem] = IsomorphismRegistry()
    for key in sorted(finished):
        system = build_system(finished[key])
        registry.add(system.graph, system)

    members = sorted(registry.items(), key=lambda s: s.lattice_key())
    logger.info(f"Family {family.value}_{h}: {len(members)} member(s)")
    return members


# ============================================================================
# EXHAUSTIVE ENUMERATION
# ============================================================================

@lru_cache(maxsize=None)
def _catacondensed_shapes(h: int) -> Tuple[Tuple[Cell, ...], ...]:
    """Canonical cell sets of h cells whose adjacency graph is a tree."""
    shapes: Set[Tuple[Cell, ...]] = {((0, 0),)}
    for _ in range(h - 1):
        grown: Set[Tuple[Cell, ...]] = set()
        for shape in shapes:
            cells: FrozenSet[Cell] = frozenset(shape)
            for cell in shape:
                for candidate in hex_lattice.neighbors(cell):
                    if candidate in cells:
                        continue
                    touching = sum(1 for n in hex_lattice.neighbors(candidate) if n in cells)
                    if touching == 1:
                        grown.add(hex_lattice.canonical_shape(cells | {candidate}))
        shapes = grown
    return tuple(sorted(shapes))


def _check_guard(h: int, limit: Optional[int]) -> None:
    limit = settings.max_enumeration_hexagons if limit is None else limit
    if h > limit:
        raise EnumerationGuardError(
            f"h={h} exceeds the exhaustive enumeration guard ({limit}); "
            f"raise POLARITY_MAX_ENUMERATION_HEXAGONS or use generate_family for larger systems"
        )


def enumerate_catafused(h: int, kind: SystemKind = SystemKind.BENZENOID, limit: Optional[int] = None) -> List[BuiltSystem]:
    """
    Every lattice-realizable catacondensed system with h hexagons, once per isomorphism class.

    Cell sets are grown one hexagon at a time, each new cell touching exactly
    one existing cell; congruent sets are merged by lattice symmetry first and
    the built graphs are then deduplicated by isomorphism.

    Raises:
        EnumerationGuardError: h above the configured guard
        SpecError: phenylene with h < 2
        ValueError: h < 1
    """
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    _check_guard(h, limit)
    if kind == SystemKind.PHENYLENE and h < MIN_PHENYLENE_HEXAGONS:
        raise SpecError(f"a phenylene needs at least {MIN_PHENYLENE_HEXAGONS} hexagons, got {h}")

    registry: IsomorphismRegistry[BuiltSystem] = IsomorphismRegistry()
    for shape in _catacondensed_shapes(h):
        system = build_system(spec_from_cells(shape, kind))
        if not registry.add(system.graph, system):
            logger.debug(f"Shape {shape} duplicates an earlier system up to isomorphism")

    systems = sorted(registry.items(), key=lambda s: s.lattice_key())
    logger.info(f"Enumerated {len(systems)} {kind.value} system(s) with h={h}")
    return systems


def _family_registry(systems: List[BuiltSystem]) -> IsomorphismRegistry[BuiltSystem]:
    registry: IsomorphismRegistry[BuiltSystem] = IsomorphismRegistry()
    for system in systems:
        registry.add(system.graph, system)
    return registry


def _extremal_families(kind: SystemKind) -> Tuple[Family, Family]:
    if kind == SystemKind.PHENYLENE:
        return Family.P, Family.P_PRIME
    return Family.B, Family.B_PRIME


def family_tags(systems: List[BuiltSystem], h: int, kind: SystemKind) -> List[Tuple[Family, ...]]:
    """Families each system belongs to (by isomorphism), or (other,)."""
    maximal, near = _extremal_families(kind)
    registries = [(Family.L, _family_registry([linear_chain(h, kind)]))]
    if h >= 2:
        registries.append((maximal, _family_registry(generate_family(h, maximal))))
    if h >= 3 and h % 2 == 1:
        registries.append((near, _family_registry(generate_family(h, near))))

    tags = []
    for system in systems:
        found = tuple(family for family, registry in registries if system.graph in registry)
        tags.append(found or (Family.OTHER,))
    return tags


# ============================================================================
# VERIFICATION
# ============================================================================

@dataclass
class ExtremalReport:
    """Outcome of checking the extremal statements for one (h, kind)."""
    h: int
    kind: SystemKind
    min_value: int
    min_witnesses: List[BuiltSystem]
    max_value: int
    max_witnesses: List[BuiltSystem]
    min_unique_is_linear: bool
    max_set_equals_family: bool
    prime_members_fall_short: Optional[bool]
    system_count: int
    counterexamples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.min_unique_is_linear
            and self.max_set_equals_family
            and self.prime_members_fall_short is not False
            and not self.counterexamples
        )


def verify_extremal(h: int, kind: SystemKind = SystemKind.BENZENOID, limit: Optional[int] = None) -> ExtremalReport:
    """
    Scan the exhaustive enumeration and compare its extremes with the families.

    Failures are report content (counterexamples), never exceptions.

    Raises:
        ValueError: h < 2
        EnumerationGuardError: h above the configured guard
    """
    if h < 2:
        raise ValueError(f"extremal verification needs h >= 2, got {h}")
    systems = enumerate_catafused(h, kind, limit)
    values = [wiener_polarity_oracle(s.graph) for s in systems]
    counterexamples = []

    for system, value in zip(systems, values):
        closed = closed_form_report(system.profile, kind).wp
        if closed != value:
            counterexamples.append(
                f"{system.spec.to_text().strip()!r}: closed form {closed} != oracle {value}"
            )

    min_value, max_value = min(values), max(values)
    min_witnesses = [s for s, v in zip(systems, values) if v == min_value]
    max_witnesses = [s for s, v in zip(systems, values) if v == max_value]

    chain = linear_chain(h, kind)
    min_unique_is_linear = len(min_witnesses) == 1 and isomorphic(min_witnesses[0].graph, chain.graph)
    if not min_unique_is_linear:
        counterexamples.append(f"minimum {min_value} attained by {len(min_witnesses)} system(s), expected only L_{h}")

    maximal, near = _extremal_families(kind)
    family = generate_family(h, maximal)
    max_set_equals_family = same_classes((s.graph for s in max_witnesses), (s.graph for s in family))
    if not max_set_equals_family:
        counterexamples.append(
            f"maximum {max_value} attained by {len(max_witnesses)} system(s); "
            f"{maximal.value}_{h} has {len(family)} member(s)"
        )

    prime_members_fall_short = None
    if h % 2 == 1:
        primes = generate_family(h, near)
        max_b = max(s.profile.b for s in family)
        prime_members_fall_short = all(
            p.profile.b == max_b and wiener_polarity_oracle(p.graph) < max_value for p in primes
        )
        if not prime_members_fall_short:
            counterexamples.append(f"some {near.value}_{h} member misses b={max_b} or reaches W_p={max_value}")

    report = ExtremalReport(
        h=h,
        kind=kind,
        min_value=min_value,
        min_witnesses=min_witnesses,
        max_value=max_value,
        max_witnesses=max_witnesses,
        min_unique_is_linear=min_unique_is_linear,
        max_set_equals_family=max_set_equals_family,
        prime_members_fall_short=prime_members_fall_short,
        system_count=len(systems),
        counterexamples=counterexamples,
    )
    status = "passed" if report.passed else "FAILED"
    logger.info(f"Extremal check {kind.value} h={h}: {status} (min={min_value}, max={max_value})")
    return report


@dataclass
class SweepReport:
    """Per-system agreement checks over one exhaustive enumeration."""
    h: int
    kind: SystemKind
    system_count: int
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _expected_census(kind: SystemKind, h: int) -> Dict[int, int]:
    if kind == SystemKind.PHENYLENE:
        return {3: 0, 4: h - 1, 5: 0, 6: h}
    return {3: 0, 4: 0, 5: 0, 6: h}


def agreement_sweep(h: int, kind: SystemKind = SystemKind.BENZENOID, limit: Optional[int] = None) -> SweepReport:
    """
    Check every enumerated system: three-way W_p agreement, Zagreb closed
    forms, structural counts, the segment identities, graph-level hexagon
    classes, formula preconditions and the small-cycle census.
    """
    systems = enumerate_catafused(h, kind, limit)
    failures = []

    for system in systems:
        label = system.spec.to_text().strip().replace("\n", "; ")
        problems = []

        inventory = build_inventory(system.graph)
        try:
            values = three_way_wiener_polarity(system)
        except PreconditionError:
            problems.append("formula preconditions fail")
        else:
            if not values.agree:
                problems.append(f"W_p closed={values.closed_form} formula={values.formula} oracle={values.oracle}")

        closed = closed_form_report(system.profile, kind)
        if (first_zagreb(system.graph), second_zagreb(system.graph)) != (closed.m1, closed.m2):
            problems.append("Zagreb indices differ from closed forms")

        if structural_counts(system) != expected_counts(kind, h, system.profile.n_i):
            problems.append(f"structural counts {structural_counts(system)}")

        if not system.profile.segment_identities_hold() or (h >= 2 and system.profile.s > h - 1):
            problems.append(f"segment identities fail for {system.profile.counts()}")

        if classify_faces(system) != system.profile.per_hexagon:
            problems.append("graph-level hexagon classes differ from dualist classes")

        census = {k: inventory.count(k) for k in (3, 4, 5, 6)}
        if census != _expected_census(kind, h):
            problems.append(f"cycle census {census}")

        failures.extend(f"[{label}] {p}" for p in problems)

    report = SweepReport(h=h, kind=kind, system_count=len(systems), failures=failures)
    if failures:
        logger.error(f"Agreement sweep {kind.value} h={h}: {len(failures)} failure(s)")
    return report
