"""Tests for axial lattice geometry and symmetry."""

import pytest

from polarity.utils import hex_lattice
from polarity.utils.hex_lattice import (
    DIRECTIONS,
    adjacency_pairs,
    are_adjacent,
    canonical_shape,
    cell_degrees,
    corner_keys,
    direction_between,
    opposite,
    reflect,
    rotate,
    shared_side,
    step,
    symmetric_images,
)


class TestSteps:
    def test_step_and_back(self):
        for d in range(6):
            assert step(step((2, -1), d), opposite(d)) == (2, -1)

    def test_direction_between(self):
        for d in range(6):
            assert direction_between((0, 0), step((0, 0), d)) == d

    def test_non_adjacent_cells(self):
        assert not are_adjacent((0, 0), (1, 1))
        with pytest.raises(ValueError, match="not adjacent"):
            direction_between((0, 0), (2, 0))


class TestCorners:
    def test_six_distinct_corners(self):
        assert len(set(corner_keys((0, 0)))) == 6

    @pytest.mark.parametrize("direction", range(6))
    def test_adjacent_cells_share_one_side(self, direction):
        a = (0, 0)
        b = step(a, direction)
        shared = set(corner_keys(a)) & set(corner_keys(b))
        assert len(shared) == 2

        i, j = shared_side(direction)
        assert {corner_keys(a)[i], corner_keys(a)[j]} == shared
        k, m = shared_side(opposite(direction))
        assert {corner_keys(b)[k], corner_keys(b)[m]} == shared

    def test_three_cells_meet_at_a_corner(self):
        cells = [(0, 0), (1, 0), (0, 1)]
        common = set(corner_keys(cells[0]))
        for cell in cells[1:]:
            common &= set(corner_keys(cell))
        assert len(common) == 1

    def test_cells_two_apart_share_nothing(self):
        assert not set(corner_keys((0, 0))) & set(corner_keys((2, 0)))


class TestSymmetry:
    def test_rotation_advances_directions(self):
        for i, d in enumerate(DIRECTIONS):
            assert rotate(d) == DIRECTIONS[(i + 1) % 6]

    def test_reflection_mirrors_directions(self):
        for i, d in enumerate(DIRECTIONS):
            assert reflect(d) == DIRECTIONS[(-i) % 6]

    def test_twelve_images(self):
        bent = [(0, 0), (1, 0), (1, 1)]
        images = symmetric_images(bent)
        assert len(images) == 12
        assert all(len(image) == 3 for image in images)

    def test_congruent_chains_share_a_canonical_shape(self):
        horizontal = [(0, 0), (1, 0), (2, 0)]
        slanted = [(5, 5), (5, 6), (5, 7)]
        assert canonical_shape(horizontal) == canonical_shape(slanted)

    def test_linear_and_bent_chains_differ(self):
        assert canonical_shape([(0, 0), (1, 0), (2, 0)]) != canonical_shape([(0, 0), (1, 0), (1, 1)])

    def test_canonical_shape_is_translation_free(self):
        assert min(canonical_shape([(7, -3), (8, -3)])) == (0, 0)


def test_adjacency_and_degrees():
    cells = [(0, 0), (1, 0), (2, 0), (1, 1)]
    assert len(adjacency_pairs(cells)) == 4
    assert cell_degrees(cells)[(1, 0)] == 3
    assert hex_lattice.neighbors((0, 0)) == [step((0, 0), d) for d in range(6)]
