"""
Decision procedure for centrally symmetric convex (c.s.c.) position.

A finite set is in c.s.c. position exactly when its admissible-center region
is nonempty. Every YES verdict carries a witness center that has been checked
again with the direct reflect-and-check test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional

from loguru import logger

from core.errors import (
    RejectedSubsetError,
    TooFewPointsError,
    WitnessVerificationError,
)
from enums.algorithm import Algorithm
from enums.verdict import PointStatus, Verdict
from src.admissible import build_admissible_region, is_admissible_center
from src.geometry import Point, PointSet, convex_hull, dedupe, on_segment, reflect_set
from src.regions import HalfPlane


@dataclass(frozen=True)
class CscVerdict:
    """
    Answer of the decision procedure.

    Attributes:
        status (Verdict): YES, NO or REJECTED.
        witness (Optional[Point]): A verified admissible center; present iff YES.
        algorithm (Algorithm): The region construction that was requested.
        reason (str): Why the input was rejected, or why the answer is NO
            without a region computation; empty otherwise.
    """

    status: Verdict
    witness: Optional[Point]
    algorithm: Algorithm
    reason: str = ""

    def __str__(self) -> str:
        if self.status is Verdict.YES:
            return f"YES witness={self.witness}"
        if self.status is Verdict.REJECTED:
            return f"REJECTED reason={self.reason}"
        return "NO"


@dataclass(frozen=True)
class SubsetReport:
    """
    Result of checking every k-subset of a set.

    Attributes:
        all_csc (bool): True iff every subset received a YES verdict.
        checked (int): Subsets examined before stopping.
        total (int): Number of k-subsets.
        failing_subset (Optional[PointSet]): First subset, in lexicographic
            index order, whose verdict is NO.
        failing_verdict (Optional[CscVerdict]): The verdict of that subset.
    """

    all_csc: bool
    checked: int
    total: int
    failing_subset: Optional[PointSet] = None
    failing_verdict: Optional[CscVerdict] = None


@dataclass(frozen=True)
class SupportLine:
    """A closed half-plane containing X and its reflection, with `point` on its boundary."""

    point: Point
    label: str
    halfplane: HalfPlane


def is_csc_position(
    points: PointSet, algorithm: Algorithm = Algorithm.TALLEST
) -> CscVerdict:
    """
    Decides whether a point set is in c.s.c. position.

    A point strictly inside the hull answers NO at once; weakly but not
    strictly convex inputs are rejected; otherwise the admissible region is
    built and its first cell witness is re-verified.

    Args:
        points (PointSet): The set X, at least 3 points.
        algorithm (Algorithm): Region construction to use.

    Returns:
        CscVerdict: The verdict, with witness when YES.

    Raises:
        TooFewPointsError: If X has fewer than 3 points.
        WitnessVerificationError: If the region witness fails the direct check.
    """
    if len(points) < 3:
        raise TooFewPointsError(f"At least 3 points are needed, got {len(points)}.")

    status = convex_hull(points).status
    if PointStatus.INTERIOR in status:
        return CscVerdict(
            Verdict.NO, None, algorithm, "a point lies inside the convex hull"
        )
    if PointStatus.ON_EDGE in status:
        return CscVerdict(
            Verdict.REJECTED,
            None,
            algorithm,
            "points on hull edges: the set is weakly but not strictly convex",
        )

    region = build_admissible_region(points, algorithm).region
    witness = region.witness()
    if witness is None:
        return CscVerdict(Verdict.NO, None, algorithm)

    if not is_admissible_center(points, witness):
        logger.error(f"Witness {witness} failed the direct check for {points.describe()}")
        raise WitnessVerificationError(
            f"Region witness {witness} is not an admissible center."
        )
    return CscVerdict(Verdict.YES, witness, algorithm)


def all_k_subsets_csc(
    points: PointSet, k: int, algorithm: Algorithm = Algorithm.TALLEST
) -> SubsetReport:
    """
    Checks that every k-point subset is in c.s.c. position.

    Subsets are enumerated in lexicographic order of their indices and the
    check stops at the first NO.

    Args:
        points (PointSet): The set X.
        k (int): Subset size, 3 <= k <= len(X).
        algorithm (Algorithm): Region construction to use.

    Returns:
        SubsetReport: Whether all subsets pass, and the first failing one.

    Raises:
        ValueError: If k is out of range.
        RejectedSubsetError: If some subset is rejected as weakly convex.
    """
    if not 3 <= k <= len(points):
        raise ValueError(f"Subset size must be between 3 and {len(points)}, got {k}.")

    total = math.comb(len(points), k)
    for checked, indices in enumerate(combinations(range(len(points)), k), start=1):
        subset = points.subset(indices)
        verdict = is_csc_position(subset, algorithm)
        if verdict.status is Verdict.REJECTED:
            raise RejectedSubsetError(
                f"Subset {subset.describe()} rejected: {verdict.reason}", subset
            )
        if verdict.status is Verdict.NO:
            logger.info(f"Subset {subset.describe()} is not in c.s.c. position")
            return SubsetReport(False, checked, total, subset, verdict)
    return SubsetReport(True, total, total)


def _outer_halfplane(p: Point, q: Point) -> HalfPlane:
    """The closed left side of the directed line p -> q."""
    d = q - p
    return HalfPlane(d.y, -d.x, d.y * p.x - d.x * p.y)


def support_certificate(
    points: PointSet, center: Point
) -> Optional[List[SupportLine]]:
    """
    Supporting lines of the union of X and its reflection at every point of X.

    Args:
        points (PointSet): The set X.
        center (Point): A candidate center O.

    Returns:
        Optional[List[SupportLine]]: One half-plane per point of X containing
        X and 2O - X with that point on its boundary, or None when O is not
        admissible.

    Raises:
        WitnessVerificationError: If a produced half-plane misses a point.
    """
    if not is_admissible_center(points, center):
        return None

    union = dedupe(list(points) + list(reflect_set(points, center)))
    hull = list(convex_hull(union).hull)
    if len(hull) == 2:
        # Everything is collinear; either side of the common line supports it.
        hull = [hull[0], hull[1], hull[0]]
    edges = list(zip(hull, hull[1:] + hull[:1]))

    lines = []
    for index, p in enumerate(points):
        edge = next((a, b) for a, b in edges if a != b and on_segment(a, b, p))
        halfplane = _outer_halfplane(*edge)
        if not all(halfplane.contains(u) for u in union):
            raise WitnessVerificationError(
                f"Supporting half-plane {halfplane} at {p} does not contain the set."
            )
        lines.append(SupportLine(p, points.label(index), halfplane))
    return lines
