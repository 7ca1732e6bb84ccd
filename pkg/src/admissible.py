"""
Admissible-center regions.

A point O is an admissible center of a set X when X together with its
reflection 2O - X is in (weak) convex position. The set of admissible centers
of a triangle is the union of four closed convex cells cut out by its three
midlines; for a set in strict convex position it is the intersection of the
triangle regions over all triples, or, more economically, over the tallest
triangles only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from loguru import logger

from core.errors import CollinearInputError, NotStrictlyConvexError, TooFewPointsError
from enums.algorithm import Algorithm
from src.geometry import (
    Point,
    PointSet,
    convex_hull,
    dedupe,
    in_strict_convex_position,
    in_weak_convex_position,
    orientation,
    reflect_set,
)
from src.regions import Cell, HalfPlane, Region

VERTEX_NAMES = ("a", "b", "c")


@dataclass(frozen=True)
class TriangleAdmissible:
    """
    The admissible centers of a triangle abc as four labeled closed cells.

    Attributes:
        center_part (Cell): The medial triangle, bounded by the three midlines
            on the sides containing the centroid.
        parts (Dict[str, Cell]): For each vertex name x in 'a', 'b', 'c', the
            vertical angle at the midpoint of the side opposite x, bounded by
            the two midlines through that midpoint on the sides away from the
            centroid.
    """

    center_part: Cell
    parts: Dict[str, Cell]

    def part(self, name: str) -> Cell:
        return self.parts[name]

    def cells(self) -> Tuple[Cell, ...]:
        return (self.center_part,) + tuple(self.parts[n] for n in VERTEX_NAMES)

    def as_region(self) -> Region:
        return Region(self.cells())


@dataclass(frozen=True)
class TallestTriangle:
    """
    A hull edge (a, b), counter-clockwise, and an apex c of X farthest from line ab.
    """

    edge: Tuple[Point, Point]
    apex: Point

    def vertices(self) -> Tuple[Point, Point, Point]:
        return (self.edge[0], self.edge[1], self.apex)


@dataclass(frozen=True)
class AdmissibleRegion:
    """A computed admissible-center region and how it was obtained."""

    region: Region
    algorithm: Algorithm
    triangles: int


def triangle_admissible(a: Point, b: Point, c: Point) -> TriangleAdmissible:
    """
    Builds the four labeled cells of the admissible centers of triangle abc.

    Args:
        a (Point): First vertex.
        b (Point): Second vertex.
        c (Point): Third vertex.

    Returns:
        TriangleAdmissible: Center part and the a-, b- and c-parts; part x sits
        at the midpoint of the side opposite x.

    Raises:
        CollinearInputError: If the three points are collinear.

    Example:
        >>> t = triangle_admissible(Point(0, 0), Point(2, 0), Point(0, 2))
        >>> t.center_part.contains(Point(Fraction(2, 3), Fraction(2, 3)))
        True
    """
    if orientation(a, b, c) == 0:
        raise CollinearInputError(f"Triangle vertices {a}, {b}, {c} are collinear.")

    centroid = Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
    # Midpoint of the side opposite each vertex.
    mid = {
        "a": b.midpoint(c),
        "b": a.midpoint(c),
        "c": a.midpoint(b),
    }
    # Midline parallel to the side opposite x passes through the other two midpoints.
    midline: Dict[str, HalfPlane] = {}
    for name in VERTEX_NAMES:
        p, q = (mid[other] for other in VERTEX_NAMES if other != name)
        midline[name] = HalfPlane.through(p, q, inside=centroid)

    center_part = Cell.of(midline.values())
    parts = {}
    for name in VERTEX_NAMES:
        # The two midlines through mid[name] are those not parallel to its own side.
        through = [midline[other] for other in VERTEX_NAMES if other != name]
        parts[name] = Cell.of(h.reversed() for h in through)

    return TriangleAdmissible(center_part, parts)


def is_admissible_center(points: Iterable[Point], center: Point) -> bool:
    """
    Direct check: is X together with its reflection through `center` in weak
    convex position?

    Coincident points of X and its reflection are merged before the check.

    Args:
        points (Iterable[Point]): The set X (a PointSet or plain points).
        center (Point): The candidate center O.

    Returns:
        bool: True iff O is an admissible center of X.
    """
    original = list(points)
    reflected = reflect_set(PointSet(tuple(dedupe(original))), center)
    return in_weak_convex_position(dedupe(original + list(reflected.points)))


def _require_strictly_convex(points: PointSet) -> None:
    if len(points) < 3:
        raise TooFewPointsError(
            f"At least 3 points are needed, got {len(points)}."
        )
    if not in_strict_convex_position(points):
        raise NotStrictlyConvexError(
            "Admissible regions are only built for sets in strict convex position."
        )


def _intersect_triangles(triangles: Sequence[Tuple[Point, Point, Point]]) -> Region:
    region = Region.whole_plane()
    for index, (a, b, c) in enumerate(triangles):
        region = region.intersect(triangle_admissible(a, b, c).as_region())
        logger.debug(
            f"Triangle {index + 1}/{len(triangles)}: region has {len(region)} cells"
        )
        if region.is_empty():
            logger.debug("Region became empty; skipping remaining triangles.")
            break
    return region


def admissible_region_all_triples(points: PointSet) -> Region:
    """
    Intersects the triangle regions of all 3-subsets of a strictly convex set.

    Raises:
        TooFewPointsError: If the set has fewer than 3 points.
        NotStrictlyConvexError: If some point is not a hull vertex.
    """
    _require_strictly_convex(points)
    triples = list(combinations(points.points, 3))
    return _intersect_triangles(triples)


def _twice_area(a: Point, b: Point, c: Point) -> Fraction:
    return abs((b - a).cross(c - a))


def tallest_triangles(points: PointSet) -> List[TallestTriangle]:
    """
    All tallest triangles of a strictly convex set.

    For every hull edge ab (counter-clockwise, in hull order) one entry is
    produced per point of the set at maximal distance from line ab; apices of
    the same edge keep the input order.

    Raises:
        TooFewPointsError: If the set has fewer than 3 points.
        NotStrictlyConvexError: If some point is not a hull vertex.
    """
    _require_strictly_convex(points)
    hull = convex_hull(points).hull
    triangles = []
    for i, a in enumerate(hull):
        b = hull[(i + 1) % len(hull)]
        heights = [_twice_area(a, b, c) for c in points]
        tallest = max(heights)
        triangles.extend(
            TallestTriangle((a, b), c)
            for c, height in zip(points, heights)
            if height == tallest
        )
    return triangles


def admissible_region_tallest(points: PointSet) -> Region:
    """
    Intersects the triangle regions of the tallest triangles only.

    Agrees with `admissible_region_all_triples` as a set while using one
    triangle per hull edge (plus ties).

    Raises:
        TooFewPointsError: If the set has fewer than 3 points.
        NotStrictlyConvexError: If some point is not a hull vertex.
    """
    return _intersect_triangles(_distinct_tallest(points))


def _distinct_tallest(points: PointSet) -> List[Tuple[Point, Point, Point]]:
    seen = set()
    triples = []
    for triangle in tallest_triangles(points):
        key = frozenset(triangle.vertices())
        if key not in seen:
            seen.add(key)
            triples.append(triangle.vertices())
    return triples


def build_admissible_region(points: PointSet, algorithm: Algorithm) -> AdmissibleRegion:
    """
    Builds the admissible-center region with the chosen construction.

    Returns:
        AdmissibleRegion: The region plus the number of triangles it intersects.
    """
    if algorithm is Algorithm.NAIVE:
        region = admissible_region_all_triples(points)
        count = math.comb(len(points), 3)
    else:
        triples = _distinct_tallest(points)
        region = _intersect_triangles(triples)
        count = len(triples)
    logger.debug(
        f"{algorithm} region of {len(points)} points: {count} triangles, "
        f"{len(region)} cells"
    )
    return AdmissibleRegion(region, algorithm, count)
