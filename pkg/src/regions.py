"""
Exact algebra of closed convex cells and their finite unions.

A `HalfPlane` is a closed half-plane a*x + b*y <= c with primitive integer
coefficients. A `Cell` is a finite conjunction of half-planes (possibly empty,
lower-dimensional or unbounded) and a `Region` is a finite union of nonempty
cells. Feasibility is decided by Fourier-Motzkin elimination of y followed by
back-substitution, which also yields a witness point.

Complements and set differences are deliberately not supported: every set the
toolkit builds is a union of closed pieces.

Usage Example:
    >>> corner = Cell.of([HalfPlane(-1, 0, 0), HalfPlane(0, -1, 0), HalfPlane(1, 1, 1)])
    >>> corner.is_empty()
    False
    >>> corner.feasible_point()
    Point(x=Fraction(1, 2), y=Fraction(1, 4))
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Optional, Tuple

from loguru import logger

from src.geometry import Point, sort_counter_clockwise

Bound = Optional[Fraction]


@dataclass(frozen=True, order=True)
class HalfPlane:
    """
    The closed half-plane {(x, y) : a*x + b*y <= c}.

    Coefficients are normalized at construction by a positive factor to
    integers with gcd 1, so equal half-planes compare and hash equal.

    Raises:
        ValueError: If a and b are both zero.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        if a == 0 and b == 0:
            raise ValueError("A half-plane needs a nonzero normal vector.")
        scale = math.lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = (int(v * scale) for v in (a, b, c))
        g = math.gcd(ia, ib, ic)
        object.__setattr__(self, "a", ia // g)
        object.__setattr__(self, "b", ib // g)
        object.__setattr__(self, "c", ic // g)

    @classmethod
    def through(cls, p: Point, q: Point, inside: Point) -> HalfPlane:
        """
        The closed side of line pq that contains `inside`.

        Raises:
            ValueError: If p == q or `inside` lies on the line.
        """
        a = q.y - p.y
        b = p.x - q.x
        c = a * p.x + b * p.y
        side = a * inside.x + b * inside.y - c
        if side == 0:
            raise ValueError(f"Point {inside} lies on the line through {p} and {q}.")
        if side > 0:
            a, b, c = -a, -b, -c
        return cls(a, b, c)

    def value(self, p: Point) -> Fraction:
        """Signed slack a*x + b*y - c; nonpositive inside."""
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point) -> bool:
        return self.value(p) <= 0

    def on_boundary(self, p: Point) -> bool:
        return self.value(p) == 0

    def reversed(self) -> HalfPlane:
        """The closed half-plane on the other side of the same line."""
        return HalfPlane(-self.a, -self.b, -self.c)

    def boundary_intersection(self, other: HalfPlane) -> Optional[Point]:
        """Crossing point of the two boundary lines, None when parallel."""
        det = self.a * other.b - other.a * self.b
        if det == 0:
            return None
        return Point(
            Fraction(self.c * other.b - other.c * self.b, det),
            Fraction(self.a * other.c - other.a * self.c, det),
        )

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y <= {self.c}"


def _solve(constraints: Tuple[HalfPlane, ...]) -> Optional[Point]:
    """
    Fourier-Motzkin elimination of y, then back-substitution.

    The chosen x is the midpoint of the projected interval (or its finite end
    shifted by 1 when unbounded), and y is chosen the same way on the slice at
    x, so the result lies in the relative interior of the cell.
    """
    lowers: List[Tuple[Fraction, Fraction]] = []
    uppers: List[Tuple[Fraction, Fraction]] = []
    x_rows: List[Tuple[Fraction, Fraction]] = []

    for h in constraints:
        if h.b == 0:
            x_rows.append((Fraction(h.a), Fraction(h.c)))
        else:
            # y compared with slope * x + offset
            line = (Fraction(-h.a, h.b), Fraction(h.c, h.b))
            (uppers if h.b > 0 else lowers).append(line)

    for low_slope, low_offset in lowers:
        for up_slope, up_offset in uppers:
            x_rows.append((low_slope - up_slope, up_offset - low_offset))

    x_lo: Bound = None
    x_hi: Bound = None
    for coef, rhs in x_rows:
        if coef == 0:
            if rhs < 0:
                return None
        elif coef > 0:
            bound = rhs / coef
            x_hi = bound if x_hi is None else min(x_hi, bound)
        else:
            bound = rhs / coef
            x_lo = bound if x_lo is None else max(x_lo, bound)

    x = _pick(x_lo, x_hi)
    if x is None:
        return None

    y_lo = max((s * x + o for s, o in lowers), default=None)
    y_hi = min((s * x + o for s, o in uppers), default=None)
    y = _pick(y_lo, y_hi)
    if y is None:
        return None
    return Point(x, y)


def _tightest_parallel(constraints: Iterable[HalfPlane]) -> Tuple[HalfPlane, ...]:
    """
    Keeps one half-plane per outward normal direction, the tightest one.

    Half-planes with the same direction are nested, so the others are
    redundant; dropping them first keeps `Cell.prune` cheap.
    """
    tightest = {}
    for h in constraints:
        g = math.gcd(h.a, h.b)
        direction = (h.a // g, h.b // g)
        bound = Fraction(h.c, g)
        if direction not in tightest or bound < tightest[direction][0]:
            tightest[direction] = (bound, h)
    return tuple(h for _, h in tightest.values())


def _pick(lo: Bound, hi: Bound) -> Optional[Fraction]:
    """A point of the closed interval [lo, hi], interior when it has length."""
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    if lo > hi:
        return None
    return (lo + hi) / 2


@dataclass(frozen=True)
class Interval:
    """A closed interval on a parametrized line; None marks an infinite end."""

    lo: Bound
    hi: Bound


@dataclass(frozen=True)
class Cell:
    """
    A closed convex set given as the intersection of half-planes.

    The constraint tuple is kept sorted and duplicate-free; an empty tuple is
    the whole plane. Witnesses are cached per instance.
    """

    constraints: Tuple[HalfPlane, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "constraints", tuple(sorted(set(self.constraints))))

    @classmethod
    def of(cls, constraints: Iterable[HalfPlane]) -> Cell:
        return cls(tuple(constraints))

    @classmethod
    def whole_plane(cls) -> Cell:
        return cls(())

    @cached_property
    def _witness(self) -> Optional[Point]:
        point = _solve(self.constraints)
        if point is not None:
            assert self.contains(point), f"Witness {point} escapes cell {self}"
        return point

    def feasible_point(self) -> Optional[Point]:
        """
        An exact point of the cell, or None when the cell is empty.

        The point lies in the relative interior of the cell; when the cell is
        full-dimensional every constraint holds strictly there.
        """
        return self._witness

    def is_empty(self) -> bool:
        return self._witness is None

    def contains(self, p: Point) -> bool:
        return all(h.contains(p) for h in self.constraints)

    def within(self, h: HalfPlane) -> bool:
        """
        True iff the cell is contained in `h`.

        The cell meets the open outside of `h` exactly when the closed reversal
        of `h` cuts off a piece whose relative-interior witness is off the line.
        """
        outside = Cell(self.constraints + (h.reversed(),))
        witness = outside.feasible_point()
        return witness is None or h.on_boundary(witness)

    def contains_cell(self, other: Cell) -> bool:
        return all(other.within(h) for h in self.constraints)

    def lies_on_line(self, h: HalfPlane) -> bool:
        """True iff the cell is contained in the boundary line of `h`."""
        return self.within(h) and self.within(h.reversed())

    def prune(self) -> Cell:
        """
        Drops constraints implied by the others; membership is unchanged.

        Empty cells are returned as they are.
        """
        if self.is_empty():
            return self
        kept = list(self.constraints)
        for h in self.constraints:
            rest = Cell(tuple(k for k in kept if k != h))
            if rest.within(h):
                kept.remove(h)
        return Cell(tuple(kept))

    def intersect(self, other: Cell) -> Cell:
        """Set intersection, deduplicated and pruned of redundant constraints."""
        merged = Cell(_tightest_parallel(self.constraints + other.constraints))
        return merged.prune()

    def vertices(self) -> List[Point]:
        """
        Corner points of a bounded cell in counter-clockwise order.

        A segment yields its two endpoints and a single point yields itself;
        an unbounded cell yields only the corners it has.
        """
        corners = []
        for i, h in enumerate(self.constraints):
            for k in self.constraints[i + 1 :]:
                p = h.boundary_intersection(k)
                if p is not None and self.contains(p):
                    corners.append(p)
        corners = sorted(set(corners))
        if len(corners) <= 2:
            return corners
        center = Point(
            sum((p.x for p in corners), Fraction(0)) / len(corners),
            sum((p.y for p in corners), Fraction(0)) / len(corners),
        )
        return sort_counter_clockwise(corners, center)

    def trace(self, origin: Point, direction: Point) -> Optional[Interval]:
        """
        The parameters t with origin + t*direction in the cell, or None if none.
        """
        lo: Bound = None
        hi: Bound = None
        for h in self.constraints:
            coef = h.a * direction.x + h.b * direction.y
            rhs = -h.value(origin)
            if coef == 0:
                if rhs < 0:
                    return None
            elif coef > 0:
                hi = rhs / coef if hi is None else min(hi, rhs / coef)
            else:
                lo = rhs / coef if lo is None else max(lo, rhs / coef)
        if lo is not None and hi is not None and lo > hi:
            return None
        return Interval(lo, hi)

    def __str__(self) -> str:
        if not self.constraints:
            return "{plane}"
        return "{" + "; ".join(str(h) for h in self.constraints) + "}"


def _canonical_cells(cells: Iterable[Cell]) -> Tuple[Cell, ...]:
    """Nonempty cells, duplicates and cells covered by another cell removed, sorted."""
    unique = sorted(
        {cell for cell in cells if not cell.is_empty()},
        key=lambda cell: cell.constraints,
    )
    kept: List[Cell] = []
    for cell in unique:
        if any(k.contains_cell(cell) for k in kept):
            continue
        kept = [k for k in kept if not cell.contains_cell(k)]
        kept.append(cell)
    return tuple(sorted(kept, key=lambda cell: cell.constraints))


@dataclass(frozen=True)
class Region:
    """
    A finite union of nonempty closed cells; no cells means the empty set.

    Cells are kept in a canonical order so witnesses and renderings are
    reproducible. Two regions are compared by membership, never by their cell
    lists.
    """

    cells: Tuple[Cell, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", _canonical_cells(self.cells))

    @classmethod
    def of(cls, cells: Iterable[Cell]) -> Region:
        return cls(tuple(cells))

    @classmethod
    def empty(cls) -> Region:
        return cls(())

    @classmethod
    def whole_plane(cls) -> Region:
        return cls((Cell.whole_plane(),))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def is_empty(self) -> bool:
        return not self.cells

    def intersect(self, other: Region) -> Region:
        """All pairwise cell intersections, empty ones dropped."""
        if self.is_empty() or other.is_empty():
            return Region.empty()
        pieces = [c1.intersect(c2) for c1 in self.cells for c2 in other.cells]
        result = Region(tuple(pieces))
        logger.debug(
            f"Region intersection: {len(self)} x {len(other)} cells -> {len(result)}"
        )
        return result

    def contains(self, p: Point) -> bool:
        return any(cell.contains(p) for cell in self.cells)

    def witness(self) -> Optional[Point]:
        """The feasible point of the first cell, or None for the empty region."""
        if self.is_empty():
            return None
        return self.cells[0].feasible_point()
