"""
Hexagonal Lattice Utilities
===========================

Axial cell coordinates for the regular hexagonal lattice.

Cells are (q, r) pairs. Direction labels 0..5 run counterclockwise, 60
degrees apart, starting east (with x = q + r/2, y = r * sqrt(3)/2):

    0: (+1,  0)   1: ( 0, +1)   2: (-1, +1)
    3: (-1,  0)   4: ( 0, -1)   5: (+1, -1)

Corner j of a cell sits between directions j and j+1. Corner keys are exact
integers on the lattice scaled by three (3 * cell + d_j + d_{j+1}), so the
corners two adjacent cells share compare equal without floating point.
"""

from typing import Dict, FrozenSet, Iterable, List, Tuple

Cell = Tuple[int, int]
CornerKey = Tuple[int, int]

DIRECTIONS: Tuple[Cell, ...] = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
DIRECTION_COUNT = len(DIRECTIONS)


def step(cell: Cell, direction: int) -> Cell:
    """Neighbouring cell in the given direction."""
    dq, dr = DIRECTIONS[direction % DIRECTION_COUNT]
    return (cell[0] + dq, cell[1] + dr)


def opposite(direction: int) -> int:
    return (direction + 3) % DIRECTION_COUNT


def neighbors(cell: Cell) -> List[Cell]:
    return [step(cell, d) for d in range(DIRECTION_COUNT)]


def direction_between(a: Cell, b: Cell) -> int:
    """Direction label from cell a to the adjacent cell b."""
    delta = (b[0] - a[0], b[1] - a[1])
    try:
        return DIRECTIONS.index(delta)
    except ValueError:
        raise ValueError(f"cells {a} and {b} are not adjacent") from None


def are_adjacent(a: Cell, b: Cell) -> bool:
    return (b[0] - a[0], b[1] - a[1]) in DIRECTIONS


def corner_key(cell: Cell, corner: int) -> CornerKey:
    """Exact key of corner j (between directions j and j+1) of a cell."""
    d1 = DIRECTIONS[corner % DIRECTION_COUNT]
    d2 = DIRECTIONS[(corner + 1) % DIRECTION_COUNT]
    return (3 * cell[0] + d1[0] + d2[0], 3 * cell[1] + d1[1] + d2[1])


def corner_keys(cell: Cell) -> List[CornerKey]:
    """The six corner keys of a cell in counterclockwise order."""
    return [corner_key(cell, j) for j in range(DIRECTION_COUNT)]


def shared_side(direction: int) -> Tuple[int, int]:
    """Corner indices of the side a cell shares with its neighbour in this direction."""
    return ((direction - 1) % DIRECTION_COUNT, direction % DIRECTION_COUNT)


# ============================================================================
# SYMMETRIES
# ============================================================================

def rotate(cell: Cell) -> Cell:
    """Rotate 60 degrees counterclockwise about the origin (d_i -> d_{i+1})."""
    q, r = cell
    return (-r, q + r)


def reflect(cell: Cell) -> Cell:
    """Reflect across the direction-0 axis (d_i -> d_{-i})."""
    q, r = cell
    return (q + r, -r)


def _normalize(cells: Iterable[Cell]) -> Tuple[Cell, ...]:
    cells = list(cells)
    min_q = min(q for q, _ in cells)
    min_r = min(r for _, r in cells)
    return tuple(sorted((q - min_q, r - min_r) for q, r in cells))


def symmetric_images(cells: Iterable[Cell]) -> List[Tuple[Cell, ...]]:
    """All 12 images of a cell set under rotations and reflections, translated to the origin."""
    images = []
    base = list(cells)
    for mirrored in (False, True):
        current = [reflect(c) for c in base] if mirrored else list(base)
        for _ in range(DIRECTION_COUNT):
            images.append(_normalize(current))
            current = [rotate(c) for c in current]
    return images


def canonical_shape(cells: Iterable[Cell]) -> Tuple[Cell, ...]:
    """Lexicographically smallest image: equal for congruent cell sets."""
    return min(symmetric_images(cells))


def adjacency_pairs(cells: Iterable[Cell]) -> FrozenSet[FrozenSet[Cell]]:
    """Unordered pairs of adjacent cells within the set."""
    cell_set = set(cells)
    return frozenset(
        frozenset((c, n)) for c in cell_set for n in neighbors(c) if n in cell_set
    )


def cell_degrees(cells: Iterable[Cell]) -> Dict[Cell, int]:
    cell_set = set(cells)
    return {c: sum(1 for n in neighbors(c) if n in cell_set) for c in cell_set}
