"""
Exact planar geometry kernel.

Coordinates are `fractions.Fraction` values; every predicate is decided exactly,
without tolerances. Points are immutable, so all functions here are pure and
safe to call from any thread.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from core.errors import InvalidPointSetError
from enums.verdict import PointStatus

Number = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Point:
    """
    An exact planar point. Ordering is lexicographic on (x, y).

    Usage:
        >>> Point(1, Fraction(1, 2))
        Point(x=Fraction(1, 1), y=Fraction(1, 2))
    """

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, factor: Number) -> Point:
        return Point(self.x * factor, self.y * factor)

    def cross(self, other: Point) -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: Point) -> Fraction:
        return self.x * other.x + self.y * other.y

    def norm2(self) -> Fraction:
        return self.dot(self)

    def midpoint(self, other: Point) -> Point:
        return Point((self.x + other.x) / 2, (self.y + other.y) / 2)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class PointSet:
    """
    An ordered set of pairwise distinct points with optional labels.

    Attributes:
        points (Tuple[Point, ...]): The points, in input order.
        labels (Optional[Tuple[str, ...]]): One distinct label per point, or None.

    Raises:
        InvalidPointSetError: On repeated points, repeated labels or a label
            count different from the point count.
    """

    points: Tuple[Point, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        if len(set(self.points)) != len(self.points):
            raise InvalidPointSetError("Point set contains repeated points.")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.points):
                raise InvalidPointSetError(
                    f"Expected {len(self.points)} labels, got {len(self.labels)}."
                )
            if len(set(self.labels)) != len(self.labels):
                raise InvalidPointSetError("Point set contains repeated labels.")

    @classmethod
    def of(cls, coordinates: Iterable[Tuple[Number, Number]]) -> PointSet:
        """Builds an unlabeled set from coordinate pairs."""
        return cls(tuple(Point(x, y) for x, y in coordinates))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, index: int) -> Point:
        return self.points[index]

    def label(self, index: int) -> str:
        """Label of a point, falling back to its index."""
        return self.labels[index] if self.labels is not None else str(index)

    def point(self, label: str) -> Point:
        """Looks up a point by label."""
        if self.labels is None or label not in self.labels:
            raise KeyError(label)
        return self.points[self.labels.index(label)]

    def subset(self, indices: Sequence[int]) -> PointSet:
        """The points at `indices` (labels kept), in the given order."""
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[i] for i in indices)
        return PointSet(tuple(self.points[i] for i in indices), labels)

    def without(self, label: str) -> PointSet:
        """The set with the point carrying `label` removed."""
        if self.labels is None or label not in self.labels:
            raise KeyError(label)
        drop = self.labels.index(label)
        return self.subset([i for i in range(len(self)) if i != drop])

    def describe(self) -> str:
        return ",".join(self.label(i) for i in range(len(self)))


@dataclass(frozen=True)
class HullClassification:
    """
    Convex hull of a point set together with the position of every input point.

    Attributes:
        hull (Tuple[Point, ...]): Strictly convex hull vertices, counter-clockwise,
            starting from the lexicographically smallest point.
        status (Tuple[PointStatus, ...]): One status per input point, in input order.
    """

    hull: Tuple[Point, ...]
    status: Tuple[PointStatus, ...]

    def count(self, status: PointStatus) -> int:
        return sum(1 for s in self.status if s is status)


def orientation(p: Point, q: Point, r: Point) -> int:
    """
    Sign of the cross product (q - p) x (r - p).

    Returns:
        int: +1 for a counter-clockwise turn, -1 for a clockwise turn, 0 when
        the three points are collinear.

    Example:
        >>> orientation(Point(0, 0), Point(1, 0), Point(0, 1))
        1
    """
    det = (q - p).cross(r - p)
    return (det > 0) - (det < 0)


def on_segment(p: Point, q: Point, r: Point) -> bool:
    """True iff r lies on the closed segment pq."""
    if orientation(p, q, r) != 0:
        return False
    return min(p.x, q.x) <= r.x <= max(p.x, q.x) and min(p.y, q.y) <= r.y <= max(
        p.y, q.y
    )


def _hull_vertices(points: Sequence[Point]) -> List[Point]:
    """Monotone chain keeping only strict turns."""
    ordered = sorted(set(points))
    if len(ordered) <= 2:
        return ordered

    def chain(sequence: Iterable[Point]) -> List[Point]:
        stack: List[Point] = []
        for p in sequence:
            while len(stack) > 1 and orientation(stack[-2], stack[-1], p) <= 0:
                stack.pop()
            stack.append(p)
        return stack

    lower = chain(ordered)
    upper = chain(reversed(ordered))
    # All points collinear: both chains collapse to the two extremes.
    return lower[:-1] + upper[:-1]


def convex_hull(points: Iterable[Point]) -> HullClassification:
    """
    Computes the convex hull and classifies every input point.

    Collinear inputs yield a 2-point hull whose inner points are ON_EDGE.

    Args:
        points (Iterable[Point]): A PointSet or any iterable of points.

    Returns:
        HullClassification: The hull and the per-point statuses.
    """
    points = list(points)
    hull = _hull_vertices(points)
    vertices = set(hull)
    edges = list(zip(hull, hull[1:] + hull[:1])) if len(hull) > 1 else []

    status: List[PointStatus] = []
    for p in points:
        if p in vertices:
            status.append(PointStatus.VERTEX)
        elif any(on_segment(a, b, p) for a, b in edges):
            status.append(PointStatus.ON_EDGE)
        else:
            status.append(PointStatus.INTERIOR)
    return HullClassification(tuple(hull), tuple(status))


def in_strict_convex_position(points: Iterable[Point]) -> bool:
    """True iff every point is a vertex of the convex hull."""
    return all(s is PointStatus.VERTEX for s in convex_hull(points).status)


def in_weak_convex_position(points: Iterable[Point]) -> bool:
    """True iff no point lies strictly inside the convex hull."""
    return all(s is not PointStatus.INTERIOR for s in convex_hull(points).status)


def reflect_point(p: Point, center: Point) -> Point:
    return Point(2 * center.x - p.x, 2 * center.y - p.y)


def reflect_set(points: PointSet, center: Point) -> PointSet:
    """
    The reflection 2O - X of a set through `center`, order and labels preserved.
    """
    return PointSet(
        tuple(reflect_point(p, center) for p in points.points), points.labels
    )


def dedupe(points: Iterable[Point]) -> List[Point]:
    """Distinct points, first occurrence kept."""
    return list(dict.fromkeys(points))


def _half(v: Point) -> int:
    return 0 if v.y > 0 or (v.y == 0 and v.x > 0) else 1


def compare_directions(u: Point, v: Point) -> int:
    """
    Orders nonzero vectors by polar angle in [0, 2*pi), exactly.

    Returns:
        int: Negative, zero or positive, as for `functools.cmp_to_key`.
    """
    if _half(u) != _half(v):
        return _half(u) - _half(v)
    turn = u.cross(v)
    return (turn < 0) - (turn > 0)


def sort_counter_clockwise(points: Iterable[Point], center: Point) -> List[Point]:
    """Sorts points by angle around `center` (which must differ from all of them)."""
    return sorted(
        points, key=cmp_to_key(lambda p, q: compare_directions(p - center, q - center))
    )
