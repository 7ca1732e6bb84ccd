from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.geometry import Point
from src.regions import Cell, HalfPlane, Interval, Region
from tests.strategies import halfplanes

UNIT_SQUARE = Cell.of(
    [HalfPlane(-1, 0, 0), HalfPlane(1, 0, 1), HalfPlane(0, -1, 0), HalfPlane(0, 1, 1)]
)


class TestHalfPlane:
    def test_normalizes_by_positive_factor(self):
        assert HalfPlane(2, 4, 6) == HalfPlane(1, 2, 3)
        assert HalfPlane(Fraction(1, 2), 1, 0) == HalfPlane(1, 2, 0)
        assert HalfPlane(-2, 0, 4) == HalfPlane(-1, 0, 2)
        assert HalfPlane(1, 0, 1) != HalfPlane(-1, 0, -1)

    def test_rejects_zero_normal(self):
        with pytest.raises(ValueError):
            HalfPlane(0, 0, 1)

    def test_through_picks_the_side_of_the_inside_point(self):
        h = HalfPlane.through(Point(0, 0), Point(1, 0), inside=Point(0, 1))
        assert h == HalfPlane(0, -1, 0)
        assert h.contains(Point(5, 1))
        assert not h.contains(Point(0, -1))
        with pytest.raises(ValueError):
            HalfPlane.through(Point(0, 0), Point(1, 0), inside=Point(2, 0))

    def test_reversed_shares_the_boundary(self):
        h = HalfPlane(1, 1, 1)
        assert h.reversed().contains(Point(1, 1))
        assert h.on_boundary(Point(1, 0)) and h.reversed().on_boundary(Point(1, 0))

    def test_boundary_intersection(self):
        assert HalfPlane(1, 0, 1).boundary_intersection(HalfPlane(0, 1, 2)) == Point(1, 2)
        assert HalfPlane(1, 0, 1).boundary_intersection(HalfPlane(-1, 0, 3)) is None

    def test_str(self):
        assert str(HalfPlane(1, -2, 3)) == "1*x + -2*y <= 3"


class TestCell:
    def test_feasible_point_of_a_corner(self):
        corner = Cell.of([HalfPlane(-1, 0, 0), HalfPlane(0, -1, 0), HalfPlane(1, 1, 1)])
        assert corner.feasible_point() == Point(Fraction(1, 2), Fraction(1, 4))

    def test_whole_plane_and_empty_cells(self):
        assert Cell.whole_plane().feasible_point() == Point(0, 0)
        assert Cell.of([HalfPlane(1, 0, 0), HalfPlane(-1, 0, -1)]).is_empty()

    def test_unbounded_cell_is_feasible(self):
        wedge = Cell.of([HalfPlane(-1, 0, 0), HalfPlane(0, -1, 0)])
        witness = wedge.feasible_point()
        assert witness is not None and wedge.contains(witness)

    def test_witness_lies_in_the_relative_interior(self):
        segment = Cell.of(
            [HalfPlane(1, 0, 1), HalfPlane(-1, 0, -1), HalfPlane(0, 1, 3), HalfPlane(0, -1, 0)]
        )
        witness = segment.feasible_point()
        assert witness.x == 1 and 0 < witness.y < 3

    def test_within_and_lies_on_line(self):
        assert UNIT_SQUARE.within(HalfPlane(1, 1, 2))
        assert not UNIT_SQUARE.within(HalfPlane(1, 1, 1))
        line = Cell.of([HalfPlane(1, 0, 1), HalfPlane(-1, 0, -1), HalfPlane(0, 1, 3)])
        assert line.lies_on_line(HalfPlane(1, 0, 1))
        assert not UNIT_SQUARE.lies_on_line(HalfPlane(1, 0, 1))

    def test_prune_drops_redundant_constraints(self):
        padded = Cell(UNIT_SQUARE.constraints + (HalfPlane(1, 0, 5), HalfPlane(1, 1, 2)))
        assert padded.prune() == UNIT_SQUARE

    def test_intersect(self):
        shifted = Cell.of(
            [HalfPlane(-2, 0, -1), HalfPlane(2, 0, 3), HalfPlane(0, -1, 0), HalfPlane(0, 1, 1)]
        )
        overlap = UNIT_SQUARE.intersect(shifted)
        assert overlap.contains(Point(Fraction(3, 4), Fraction(1, 2)))
        assert not overlap.contains(Point(Fraction(1, 4), Fraction(1, 2)))
        assert UNIT_SQUARE.contains_cell(overlap)

    def test_vertices_counter_clockwise(self):
        assert UNIT_SQUARE.vertices() == [Point(1, 1), Point(0, 1), Point(0, 0), Point(1, 0)]

    def test_trace(self):
        assert UNIT_SQUARE.trace(Point(0, Fraction(1, 2)), Point(1, 0)) == Interval(0, 1)
        assert UNIT_SQUARE.trace(Point(0, 2), Point(1, 0)) is None
        half = Cell.of([HalfPlane(-1, 0, 0)])
        assert half.trace(Point(0, 0), Point(1, 0)) == Interval(0, None)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(halfplanes(), min_size=1, max_size=5))
    def test_feasible_point_satisfies_every_constraint(self, constraints):
        cell = Cell.of(constraints)
        witness = cell.feasible_point()
        if witness is not None:
            assert all(h.contains(witness) for h in constraints)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(halfplanes(), min_size=1, max_size=4))
    def test_grid_point_implies_nonempty(self, constraints):
        cell = Cell.of(constraints)
        grid = (Point(x, y) for x, y in product(range(-5, 6), repeat=2))
        if any(cell.contains(p) for p in grid):
            assert not cell.is_empty()

    @settings(max_examples=100, deadline=None)
    @given(st.lists(halfplanes(), min_size=1, max_size=5))
    def test_prune_keeps_membership(self, constraints):
        cell = Cell.of(constraints)
        pruned = cell.prune()
        for x, y in product(range(-4, 5), repeat=2):
            p = Point(Fraction(x, 2), Fraction(y, 2))
            assert cell.contains(p) == pruned.contains(p)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(halfplanes(), min_size=1, max_size=5))
    def test_witness_of_a_full_cell_is_strictly_inside(self, constraints):
        cell = Cell.of(constraints)
        witness = cell.feasible_point()
        if witness is None:
            return
        for h in cell.constraints:
            assert h.value(witness) < 0 or cell.lies_on_line(h)

    def test_intersect_keeps_the_tightest_parallel_constraint(self):
        wide = Cell.of([HalfPlane(1, 0, 3), HalfPlane(0, 1, 1)])
        narrow = Cell.of([HalfPlane(2, 0, 1), HalfPlane(-1, 0, 0)])
        assert wide.intersect(narrow) == Cell.of(
            [HalfPlane(2, 0, 1), HalfPlane(-1, 0, 0), HalfPlane(0, 1, 1)]
        )


class TestRegion:
    def test_empty_and_duplicate_cells_are_dropped(self):
        empty = Cell.of([HalfPlane(1, 0, 0), HalfPlane(-1, 0, -1)])
        region = Region.of([UNIT_SQUARE, UNIT_SQUARE, empty])
        assert len(region) == 1
        assert Region.empty().is_empty()
        assert Region.empty().witness() is None

    def test_subsumed_cells_are_dropped(self):
        small = UNIT_SQUARE.intersect(Cell.of([HalfPlane(1, 1, 1)]))
        assert list(Region.of([small, UNIT_SQUARE])) == [UNIT_SQUARE]

    def test_intersect_is_pairwise(self):
        left = Region.of([Cell.of([HalfPlane(1, 0, 0)]), Cell.of([HalfPlane(-1, 0, -2)])])
        band = Region.of([Cell.of([HalfPlane(1, 0, 1), HalfPlane(-1, 0, 1)])])
        result = left.intersect(band)
        assert result.contains(Point(-1, 7))
        assert not result.contains(Point(Fraction(1, 2), 0))
        assert not result.contains(Point(2, 0))
        assert left.intersect(Region.empty()).is_empty()

    def test_witness_belongs_to_the_region(self):
        region = Region.of([UNIT_SQUARE])
        assert region.contains(region.witness())

    @settings(max_examples=100, deadline=None)
    @given(
        st.lists(st.lists(halfplanes(), min_size=1, max_size=3), min_size=1, max_size=3),
        st.lists(st.lists(halfplanes(), min_size=1, max_size=3), min_size=1, max_size=3),
    )
    def test_intersection_membership_is_a_conjunction(self, first, second):
        r1 = Region.of(Cell.of(c) for c in first)
        r2 = Region.of(Cell.of(c) for c in second)
        both = r1.intersect(r2)
        for x, y in product(range(-4, 5), repeat=2):
            p = Point(Fraction(x, 2), Fraction(y, 2))
            assert both.contains(p) == (r1.contains(p) and r2.contains(p))
