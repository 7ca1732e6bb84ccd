from fractions import Fraction
from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from core.errors import CollinearInputError, NotStrictlyConvexError, TooFewPointsError
from enums.algorithm import Algorithm
from enums.verdict import PointStatus, Verdict
from src.admissible import (
    admissible_region_all_triples,
    admissible_region_tallest,
    build_admissible_region,
    is_admissible_center,
    tallest_triangles,
    triangle_admissible,
)
from src.constructions import random_convex_set
from src.decision import is_csc_position
from src.geometry import Point, PointSet, convex_hull, reflect_point, reflect_set
from tests.strategies import points, rationals, small_ints, triangles

A, B, C = Point(0, 0), Point(2, 0), Point(0, 2)
SQUARE = PointSet.of([(0, 0), (1, 0), (1, 1), (0, 1)])


class TestTriangleAdmissible:
    def test_center_part_is_the_medial_triangle(self):
        t = triangle_admissible(A, B, C)
        assert t.center_part.contains(Point(Fraction(2, 3), Fraction(2, 3)))
        assert sorted(t.center_part.vertices()) == [Point(0, 1), Point(1, 0), Point(1, 1)]

    def test_parts_sit_at_the_opposite_midpoints(self):
        t = triangle_admissible(A, B, C)
        assert t.part("a").contains(Point(2, 2))
        assert t.part("b").contains(Point(-1, 2))
        assert t.part("c").contains(Point(2, -1))
        assert not t.as_region().contains(Point(5, 0))
        assert len(t.cells()) == 4

    def test_collinear_triangle_is_rejected(self):
        with pytest.raises(CollinearInputError):
            triangle_admissible(Point(0, 0), Point(1, 1), Point(2, 2))

    def test_oracle_on_known_centers(self):
        assert is_admissible_center([A, B, C], Point(2, 2))
        assert not is_admissible_center([A, B, C], Point(5, 0))
        assert not is_admissible_center([A, B, C], A)

    @settings(max_examples=300, deadline=None)
    @given(triangles(), points(rationals))
    def test_region_membership_matches_the_oracle(self, triangle, center):
        region = triangle_admissible(*triangle).as_region()
        assert region.contains(center) == is_admissible_center(triangle, center)

    def test_region_matches_the_oracle_on_grids(self):
        rng = np.random.default_rng([7])
        for _ in range(5):
            corners = [Point(*(int(v) for v in rng.integers(-10, 11, size=2))) for _ in range(3)]
            try:
                region = triangle_admissible(*corners).as_region()
            except CollinearInputError:
                continue
            for i, j in product(range(-10, 11, 2), repeat=2):
                center = Point(Fraction(i, 2), Fraction(j, 2))
                assert region.contains(center) == is_admissible_center(corners, center)

    @pytest.mark.slow
    def test_region_matches_the_oracle_on_full_grids(self):
        rng = np.random.default_rng([11])
        checked = 0
        while checked < 20:
            corners = [Point(*(int(v) for v in rng.integers(-10, 11, size=2))) for _ in range(3)]
            try:
                region = triangle_admissible(*corners).as_region()
            except CollinearInputError:
                continue
            checked += 1
            for i, j in product(range(-10, 11), repeat=2):
                center = Point(i, j)
                assert region.contains(center) == is_admissible_center(corners, center)


class TestRegions:
    def test_square_centers_lie_on_two_lines(self):
        region = admissible_region_all_triples(SQUARE)
        half = Fraction(1, 2)
        assert region.contains(Point(half, half))
        assert region.contains(Point(half, 7))
        assert region.contains(Point(-3, half))
        assert not region.contains(Point(Fraction(1, 4), Fraction(1, 4)))

    def test_region_builders_reject_bad_input(self):
        with pytest.raises(TooFewPointsError):
            admissible_region_all_triples(PointSet.of([(0, 0), (1, 0)]))
        with pytest.raises(NotStrictlyConvexError):
            admissible_region_tallest(PointSet.of([(0, 0), (1, 0), (2, 0), (1, 1)]))

    def test_tallest_triangles_of_a_square_include_ties(self):
        triangles = tallest_triangles(SQUARE)
        # Every edge of the square has two apices at equal height.
        assert len(triangles) == 8
        for triangle in triangles:
            assert triangle.apex not in triangle.edge

    def test_triangle_counts(self):
        pentagon = random_convex_set(5, 3)
        assert build_admissible_region(pentagon, Algorithm.NAIVE).triangles == 10
        assert build_admissible_region(pentagon, Algorithm.TALLEST).triangles <= 5

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=4, max_value=7), st.integers(min_value=0, max_value=10**6))
    def test_both_constructions_agree(self, n, seed):
        pts = random_convex_set(n, seed)
        naive = admissible_region_all_triples(pts)
        tallest = admissible_region_tallest(pts)
        assert naive.is_empty() == tallest.is_empty()
        for witness in [naive.witness(), tallest.witness()]:
            if witness is not None:
                assert naive.contains(witness) and tallest.contains(witness)
                assert is_admissible_center(pts, witness)

    @pytest.mark.slow
    def test_both_constructions_agree_on_sampled_points(self):
        rng = np.random.default_rng([3])
        for instance in range(200):
            pts = random_convex_set(4 + instance % 7, [3, instance])
            naive = admissible_region_all_triples(pts)
            tallest = admissible_region_tallest(pts)
            assert naive.is_empty() == tallest.is_empty()
            samples = [cell.feasible_point() for cell in list(naive) + list(tallest)]
            xs = [p.x for p in pts]
            ys = [p.y for p in pts]
            for _ in range(200):
                samples.append(
                    Point(
                        Fraction(int(rng.integers(int(min(xs)) * 10, int(max(xs)) * 10 + 11)), 10),
                        Fraction(int(rng.integers(int(min(ys)) * 10, int(max(ys)) * 10 + 11)), 10),
                    )
                )
            for p in samples:
                assert naive.contains(p) == tallest.contains(p)

    @pytest.mark.slow
    def test_region_matches_the_oracle_on_random_pairs(self):
        rng = np.random.default_rng([13])
        checked = 0
        while checked < 1000:
            a, b, c, center = (
                Point(*(Fraction(int(v), 4) for v in rng.integers(-60, 61, size=2)))
                for _ in range(4)
            )
            try:
                region = triangle_admissible(a, b, c).as_region()
            except CollinearInputError:
                continue
            assert region.contains(center) == is_admissible_center([a, b, c], center)
            checked += 1


def _affine(matrix, shift, p: Point) -> Point:
    (m11, m12), (m21, m22) = matrix
    return Point(m11 * p.x + m12 * p.y + shift.x, m21 * p.x + m22 * p.y + shift.y)


class TestAdmissibleCenters:
    @settings(max_examples=100, deadline=None)
    @given(st.lists(points(), min_size=3, max_size=6, unique=True), points())
    def test_oracle_is_symmetric_under_reflection(self, pts, center):
        reflected = reflect_set(PointSet(tuple(pts)), center)
        assert is_admissible_center(pts, center) == is_admissible_center(reflected, center)

    @settings(max_examples=20, deadline=None)
    @given(
        st.integers(min_value=4, max_value=6),
        st.integers(min_value=0, max_value=10**6),
        st.lists(st.integers(min_value=-3, max_value=3), min_size=4, max_size=4),
        points(small_ints),
    )
    def test_centers_follow_affine_maps(self, n, seed, entries, shift):
        matrix = ((entries[0], entries[1]), (entries[2], entries[3]))
        assume(entries[0] * entries[3] - entries[1] * entries[2] != 0)
        pts = random_convex_set(n, seed)
        image = PointSet(tuple(_affine(matrix, shift, p) for p in pts))
        before = is_csc_position(pts)
        after = is_csc_position(image)
        assert before.status is after.status
        if before.status is Verdict.YES:
            moved = _affine(matrix, shift, before.witness)
            assert is_admissible_center(image, moved)
            assert admissible_region_tallest(image).contains(moved)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=3, max_value=7), st.integers(min_value=0, max_value=10**6))
    def test_witness_hull_is_centrally_symmetric(self, n, seed):
        pts = random_convex_set(n, seed)
        verdict = is_csc_position(pts)
        assume(verdict.status is Verdict.YES)
        center = verdict.witness
        union = list(dict.fromkeys(list(pts) + [reflect_point(p, center) for p in pts]))
        result = convex_hull(union)
        assert {reflect_point(v, center) for v in result.hull} == set(result.hull)
        assert all(result.status[union.index(p)] is not PointStatus.INTERIOR for p in pts)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=4, max_value=7), st.integers(min_value=0, max_value=10**6))
    def test_witnesses_survive_in_every_subset(self, n, seed):
        pts = random_convex_set(n, seed)
        verdict = is_csc_position(pts)
        assume(verdict.status is Verdict.YES)
        for size in range(3, n):
            for indices in combinations(range(n), size):
                subset = pts.subset(list(indices))
                assert admissible_region_tallest(subset).contains(verdict.witness)
