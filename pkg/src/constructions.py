"""
Concrete point sets and their end-to-end verification.

The nine-gon is a regular 9-gon whose vertices a1, a2, a3 are pulled towards
the center. Its coordinates are exact rational roundings of cos/sin, so every
property below is verified exactly for the rational set that is actually
built. This module also checks the two-line answer for parallelograms and
generates random strictly convex sets for tests and the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from loguru import logger

from core.config import settings
from core.errors import InvalidPointSetError, MissingLabelsError, NotParallelogramError
from enums.algorithm import Algorithm
from enums.verdict import Verdict
from src.admissible import (
    admissible_region_all_triples,
    build_admissible_region,
    is_admissible_center,
    triangle_admissible,
)
from src.decision import is_csc_position
from src.geometry import (
    Point,
    PointSet,
    compare_directions,
    in_strict_convex_position,
    orientation,
)
from src.regions import HalfPlane, Interval

NINE_GON_LABELS = ("a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3")
# Triangles whose center parts have no common point.
NINE_GON_TRIANGLES = (("a1", "b2", "c2"), ("a2", "b3", "c3"), ("a3", "b1", "c1"))

Seed = Union[int, Sequence[int]]


@dataclass(frozen=True)
class NineGonSpec:
    """
    Parameters of the nine-gon construction.

    Attributes:
        scale (Fraction): Factor applied to a1, a2, a3; 0 < scale < 1.
        digits (int): Decimal places of the cos/sin roundings; at least 6.

    Raises:
        ValueError: If a parameter is out of range.
    """

    scale: Fraction = Fraction(settings.NINEGON_SCALE)
    digits: int = settings.NINEGON_DIGITS

    def __post_init__(self) -> None:
        object.__setattr__(self, "scale", Fraction(self.scale))
        if not 0 < self.scale < 1:
            raise ValueError(f"Scale must satisfy 0 < scale < 1, got {self.scale}.")
        if self.digits < 6:
            raise ValueError(f"At least 6 digits are required, got {self.digits}.")


@dataclass(frozen=True)
class DeletionResult:
    """Verdict for the set with one labeled point removed."""

    label: str
    nonempty: bool
    witness: Optional[Point]


@dataclass(frozen=True)
class WitnessCheck:
    """A given center tested directly against the set with `label` removed."""

    label: str
    center: Point
    admissible: bool


@dataclass(frozen=True)
class NineGonReport:
    """
    Outcome of `verify_nine_gon`.

    Attributes:
        full_set_empty (Dict[Algorithm, bool]): Emptiness of the full region per
            construction.
        deletions (Tuple[DeletionResult, ...]): One entry per deleted label, in
            label order; nonempty entries carry a verified witness.
        witness_checks (Tuple[WitnessCheck, ...]): The published centers for
            the deletions of a1 and b2.
        center_parts_pairwise_empty (Tuple[bool, ...]): Emptiness of the
            intersection of each pair of center parts of a1b2c2, a2b3c3 and
            a3b1c1, in pair order (12, 13, 23). Informational.
        center_parts_common_empty (bool): Whether the three center parts have
            no common point.
    """

    full_set_empty: Dict[Algorithm, bool]
    deletions: Tuple[DeletionResult, ...]
    witness_checks: Tuple[WitnessCheck, ...]
    center_parts_pairwise_empty: Tuple[bool, ...]
    center_parts_common_empty: bool

    @property
    def passed(self) -> bool:
        return (
            all(self.full_set_empty.values())
            and all(d.nonempty and d.witness is not None for d in self.deletions)
            and all(check.admissible for check in self.witness_checks)
            and self.center_parts_common_empty
        )


def _rounded(value: sympy.Expr, digits: int) -> Fraction:
    """Exact decimal rounding (half-even) of a sympy number to `digits` places."""
    with localcontext() as ctx:
        ctx.prec = digits + 30
        text = str(sympy.N(value, digits + 10))
        quantum = Decimal(1).scaleb(-digits)
        return Fraction(Decimal(text).quantize(quantum, rounding=ROUND_HALF_EVEN))


def regular_polygon(n: int, digits: int) -> List[Point]:
    """
    Vertices of the regular n-gon inscribed in the unit circle, vertex j at
    angle 2*pi*j/n, coordinates rounded to `digits` decimals. Vertex 0 is (1, 0).
    """
    vertices = []
    for j in range(n):
        angle = 2 * sympy.pi * j / n
        vertices.append(
            Point(_rounded(sympy.cos(angle), digits), _rounded(sympy.sin(angle), digits))
        )
    return vertices


def _polygon_label(j: int, n: int) -> str:
    if n % 3:
        return f"v{j}"
    return f"{'abc'[j % 3]}{j // 3 + 1}"


def scaled_polygon(n: int, scale: Fraction, digits: int) -> PointSet:
    """
    A regular n-gon with every vertex j = 0 (mod 3) scaled by `scale`.

    For n divisible by 3 the vertices are labeled a1, b1, c1, a2, ... counter-
    clockwise from the positive x-axis, so the scaled ones are exactly the
    a-vertices and a1 = (scale, 0).
    """
    vertices = regular_polygon(n, digits)
    points = tuple(v.scaled(scale) if j % 3 == 0 else v for j, v in enumerate(vertices))
    return PointSet(points, tuple(_polygon_label(j, n) for j in range(n)))


def build_nine_gon(spec: NineGonSpec = NineGonSpec()) -> PointSet:
    """
    Builds the labeled nine-gon: a regular 9-gon with a1 on the positive
    x-axis and the triangle a1a2a3 scaled towards the center by `spec.scale`,
    so a1 = (scale, 0) and b1 sits at 40 degrees.

    Args:
        spec (NineGonSpec): Scale and rounding precision.

    Returns:
        PointSet: Nine points labeled a1, b1, c1, a2, b2, c2, a3, b3, c3 in
        counter-clockwise order.
    """
    points = scaled_polygon(9, spec.scale, spec.digits)
    logger.debug(f"Built nine-gon with scale {spec.scale} and {spec.digits} digits")
    return points


def _require_nine_gon_labels(points: PointSet) -> None:
    if points.labels is None or sorted(points.labels) != sorted(NINE_GON_LABELS):
        raise MissingLabelsError(
            f"The nine-gon check needs exactly the labels {', '.join(NINE_GON_LABELS)}."
        )


def verify_nine_gon(points: PointSet) -> NineGonReport:
    """
    Verifies that the labeled nine-gon is not in c.s.c. position while every
    8-point subset is.

    Checks, all exact:
        - the admissible region of the full set is empty under both constructions;
        - every single-point deletion has a nonempty region with a verified witness;
        - the published centers are admissible for the deletions of a1 and b2;
        - the center parts of a1b2c2, a2b3c3 and a3b1c1 have no common point,
          since any center of the full set would lie in all three. Their
          pairwise intersections are reported too; they need not be empty.

    Args:
        points (PointSet): The nine-gon, labeled a1 ... c3.

    Returns:
        NineGonReport: The outcome of every check.

    Raises:
        MissingLabelsError: If the labels are not exactly a1 ... c3.
    """
    _require_nine_gon_labels(points)

    full_set_empty = {}
    for algorithm in Algorithm:
        region = build_admissible_region(points, algorithm).region
        full_set_empty[algorithm] = region.is_empty()
        logger.info(f"Full set, {algorithm}: region empty = {region.is_empty()}")

    deletions = []
    for label in NINE_GON_LABELS:
        verdict = is_csc_position(points.without(label), Algorithm.TALLEST)
        nonempty = verdict.status is Verdict.YES
        deletions.append(DeletionResult(label, nonempty, verdict.witness))
        logger.info(f"Without {label}: {verdict}")

    witness_checks = []
    for label, (x, y) in settings.NINEGON_WITNESSES.items():
        center = Point(Fraction(x), Fraction(y))
        admissible = is_admissible_center(points.without(label), center)
        witness_checks.append(WitnessCheck(label, center, admissible))
        logger.info(f"Center {center} without {label}: admissible = {admissible}")

    center_parts = [
        triangle_admissible(*(points.point(name) for name in names)).center_part
        for names in NINE_GON_TRIANGLES
    ]
    pairwise = tuple(
        first.intersect(second).is_empty()
        for first, second in combinations(center_parts, 2)
    )
    first, second, third = center_parts
    common = first.intersect(second).intersect(third).is_empty()
    logger.info(f"Center parts pairwise empty: {list(pairwise)}, common empty: {common}")

    return NineGonReport(
        full_set_empty, tuple(deletions), tuple(witness_checks), pairwise, common
    )


def _line_through(origin: Point, direction: Point) -> HalfPlane:
    """One closed side of the line through `origin` along `direction`."""
    return HalfPlane(
        direction.y, -direction.x, direction.y * origin.x - direction.x * origin.y
    )


def _covers_line(intervals: List[Interval]) -> bool:
    """True iff the closed intervals cover the whole real line."""
    ordered = sorted(
        intervals, key=lambda iv: (iv.lo is not None, iv.lo if iv.lo is not None else 0)
    )
    if not ordered or ordered[0].lo is not None:
        return False
    reach = ordered[0].hi
    for interval in ordered[1:]:
        if reach is None:
            return True
        if interval.lo is not None and interval.lo > reach:
            return False
        if interval.hi is None:
            return True
        reach = max(reach, interval.hi)
    return reach is None


def _random_rational(rng: np.random.Generator, bound: int, denominator: int) -> Fraction:
    return Fraction(
        int(rng.integers(-bound, bound + 1)), int(rng.integers(1, denominator + 1))
    )


def verify_parallelogram_centers(
    a: Point,
    b: Point,
    c: Point,
    d: Point,
    samples: int = settings.PARALLELOGRAM_SAMPLES,
    seed: int = settings.PARALLELOGRAM_SEED,
) -> bool:
    """
    Checks that the admissible centers of a parallelogram's vertices form the
    two lines through its center parallel to its sides.

    The region is computed from all triples and compared with the two lines:
    every cell must lie on one of them, the cells on each line must cover it
    entirely, and membership must agree at `samples` random points on the
    lines and `samples` points off them.

    Args:
        a, b, c, d (Point): Vertices in cyclic order, a + c = b + d.
        samples (int): Points sampled on and off the lines.
        seed (int): Seed of the sampling stream.

    Returns:
        bool: True iff all three checks pass.

    Raises:
        NotParallelogramError: If abcd is not a nondegenerate parallelogram.
    """
    if a + c != b + d or orientation(a, b, c) == 0:
        raise NotParallelogramError(f"{a}, {b}, {c}, {d} is not a parallelogram.")

    center = a.midpoint(c)
    directions = (b - a, d - a)
    lines = tuple(_line_through(center, u) for u in directions)
    region = admissible_region_all_triples(PointSet((a, b, c, d)))

    for cell in region:
        if not any(cell.lies_on_line(line) for line in lines):
            logger.warning(f"Cell {cell} is not confined to either center line")
            return False

    for line, direction in zip(lines, directions):
        traces = [
            cell.trace(center, direction) for cell in region if cell.lies_on_line(line)
        ]
        if not _covers_line([t for t in traces if t is not None]):
            logger.warning(f"Cells do not cover the center line {line}")
            return False

    rng = np.random.default_rng([seed])
    u, v = directions
    for _ in range(samples):
        t = _random_rational(rng, 1000, 100)
        along = u if rng.integers(0, 2) == 0 else v
        on_line = center + along.scaled(t)
        if not region.contains(on_line):
            logger.warning(f"Point {on_line} on a center line is not admissible")
            return False
        s = _random_rational(rng, 1000, 100) or Fraction(1)
        t = t or Fraction(1)
        off_line = center + u.scaled(s) + v.scaled(t)
        if region.contains(off_line):
            logger.warning(f"Point {off_line} off the center lines is admissible")
            return False
    return True


def random_convex_set(n: int, seed: Seed) -> PointSet:
    """
    A random set of n points in strict convex position with rational coordinates.

    n - 1 random rational edge vectors are drawn, closed up by their negated sum,
    sorted by angle and summed up, which always traces a convex polygon. The
    draw is repeated on the next substream until the polygon is strictly convex.

    Args:
        n (int): Number of points, at least 3.
        seed (Seed): An integer or a sequence of nonnegative integers keying the
            random stream.

    Returns:
        PointSet: The vertices, deterministic in `seed`.

    Raises:
        ValueError: If n < 3.
        RuntimeError: If no strictly convex polygon was drawn within
            settings.RANDOM_MAX_RETRIES substreams.
    """
    if n < 3:
        raise ValueError(f"A convex polygon needs at least 3 points, got {n}.")
    key = [seed] if isinstance(seed, int) else list(seed)

    for substream in range(settings.RANDOM_MAX_RETRIES):
        rng = np.random.default_rng(key + [substream])
        edges = [
            Point(
                _random_rational(
                    rng, settings.RANDOM_COORDINATE_BOUND, settings.RANDOM_DENOMINATOR_BOUND
                ),
                _random_rational(
                    rng, settings.RANDOM_COORDINATE_BOUND, settings.RANDOM_DENOMINATOR_BOUND
                ),
            )
            for _ in range(n - 1)
        ]
        closing = Point(-sum(e.x for e in edges), -sum(e.y for e in edges))
        edges.append(closing)
        if any(e == Point(0, 0) for e in edges):
            continue

        edges.sort(key=cmp_to_key(compare_directions))
        vertices = [Point(0, 0)]
        for edge in edges[:-1]:
            vertices.append(vertices[-1] + edge)
        try:
            candidate = PointSet(tuple(vertices))
        except InvalidPointSetError:
            continue
        if in_strict_convex_position(candidate):
            return candidate
        logger.debug(f"Random polygon on substream {substream} not strictly convex")

    raise RuntimeError(
        f"No strictly convex {n}-gon after {settings.RANDOM_MAX_RETRIES} draws."
    )
