"""
Randomized search for sets whose every (n-1)-subset is in c.s.c. position
while the whole set is not.

Every trial derives its candidate from a random stream keyed by (seed, trial),
so results do not depend on how trials are scheduled over worker processes.
Candidates that pass are re-verified from scratch in the parent process before
they are reported.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import repeat
from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core.config import settings
from core.errors import InvalidPointSetError, WitnessVerificationError
from enums.algorithm import Algorithm
from enums.generator import CandidateGenerator, TrialOutcome
from enums.verdict import Verdict
from src.constructions import (
    DeletionResult,
    random_convex_set,
    regular_polygon,
    scaled_polygon,
)
from src.decision import CscVerdict, all_k_subsets_csc, is_csc_position
from src.geometry import Point, PointSet, in_strict_convex_position


class SearchConfig(BaseModel):
    """
    Parameters of a search run.

    Attributes:
        n (int): Candidate size, at least 9.
        trials (int): Number of candidates, at least 1.
        seed (int): Nonnegative key of the random streams.
        generator (CandidateGenerator): Candidate family.
        magnitude (Fraction): Largest coordinate perturbation, nonnegative.
        denominator (int): Denominator of the perturbation grid.
        parallelism (int): Worker processes.
        scale (Fraction): Factor for the pulled-in vertices of PERTURBED_NINEGON.
        digits (int): Rounding precision of regular polygon coordinates.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=9)
    trials: int = Field(default=settings.SEARCH_TRIALS, ge=1)
    seed: int = Field(default=settings.SEARCH_SEED, ge=0)
    generator: CandidateGenerator = CandidateGenerator.PERTURBED_NINEGON
    magnitude: Fraction = Fraction(settings.SEARCH_MAGNITUDE)
    denominator: int = Field(default=settings.SEARCH_DENOMINATOR, ge=1)
    parallelism: int = Field(default=settings.SEARCH_JOBS, ge=1)
    scale: Fraction = Fraction(settings.SEARCH_SCALE)
    digits: int = Field(default=settings.SEARCH_DIGITS, ge=6)

    @field_validator("magnitude", "scale", mode="before")
    @classmethod
    def _exact(cls, value) -> Fraction:
        if isinstance(value, float):
            raise ValueError("Rational parameters must not be floats.")
        return Fraction(value)

    @field_validator("magnitude")
    @classmethod
    def _nonnegative(cls, value: Fraction) -> Fraction:
        if value < 0:
            raise ValueError(f"Perturbation magnitude must be nonnegative, got {value}.")
        return value

    @model_validator(mode="after")
    def _check_generator(self) -> SearchConfig:
        if self.generator is CandidateGenerator.SYMMETRIC_NGON and self.n % 3:
            raise ValueError("The symmetric generator needs n divisible by 3.")
        if not 0 < self.scale < 1:
            raise ValueError(f"Scale must satisfy 0 < scale < 1, got {self.scale}.")
        return self


@dataclass(frozen=True)
class TrialResult:
    """Outcome of one trial; `points` is kept only for FOUND."""

    trial: int
    outcome: TrialOutcome
    points: Optional[PointSet] = None


@dataclass(frozen=True)
class SearchFinding:
    """
    A verified set that is not in c.s.c. position while all its
    (n-1)-subsets are.

    Attributes:
        trial (int): Index of the trial that produced the set.
        points (PointSet): The exact point set.
        full_verdict (CscVerdict): The NO verdict of the whole set.
        deletions (Tuple[DeletionResult, ...]): One YES result with witness per
            deleted point, in point order.
    """

    trial: int
    points: PointSet
    full_verdict: CscVerdict
    deletions: Tuple[DeletionResult, ...]


@dataclass(frozen=True)
class SearchStatistics:
    trials: int
    found: int
    not_strictly_convex: int
    full_set_csc: int
    subset_not_csc: int

    @property
    def rejected(self) -> int:
        return self.not_strictly_convex + self.full_set_csc + self.subset_not_csc


@dataclass(frozen=True)
class SearchResult:
    findings: Tuple[SearchFinding, ...]
    statistics: SearchStatistics


def _perturb(
    points: PointSet, rng: np.random.Generator, magnitude: Fraction, denominator: int
) -> PointSet:
    steps = int(magnitude * denominator)
    if steps == 0:
        return points

    def shift() -> Fraction:
        return Fraction(int(rng.integers(-steps, steps + 1)), denominator)

    moved = tuple(Point(p.x + shift(), p.y + shift()) for p in points)
    return PointSet(moved, points.labels)


def _symmetric_polygon(cfg: SearchConfig, rng: np.random.Generator) -> PointSet:
    """A regular n-gon whose radii repeat with period n/3."""
    period = cfg.n // 3
    low = Fraction(settings.SEARCH_MIN_RADIUS)
    grid = cfg.denominator
    radii = [
        Fraction(int(rng.integers(int(low * grid), grid + 1)), grid)
        for _ in range(period)
    ]
    unit = regular_polygon(cfg.n, cfg.digits)
    points = tuple(v.scaled(radii[j % period]) for j, v in enumerate(unit))
    return PointSet(points, tuple(f"v{j}" for j in range(cfg.n)))


def generate_candidate(cfg: SearchConfig, trial: int) -> PointSet:
    """
    The candidate set of one trial, a pure function of (cfg, trial).

    Raises:
        InvalidPointSetError: If a perturbation makes two points coincide.
    """
    rng = np.random.default_rng([cfg.seed, trial])
    if cfg.generator is CandidateGenerator.PERTURBED_NINEGON:
        base = scaled_polygon(cfg.n, cfg.scale, cfg.digits)
        return _perturb(base, rng, cfg.magnitude, cfg.denominator)
    if cfg.generator is CandidateGenerator.SYMMETRIC_NGON:
        base = _symmetric_polygon(cfg, rng)
        return _perturb(base, rng, cfg.magnitude, cfg.denominator)
    return random_convex_set(cfg.n, [cfg.seed, trial])


def classify_candidate(points: PointSet) -> TrialOutcome:
    """Why a candidate is rejected, or FOUND."""
    if not in_strict_convex_position(points):
        return TrialOutcome.NOT_STRICTLY_CONVEX
    if is_csc_position(points, Algorithm.TALLEST).status is Verdict.YES:
        return TrialOutcome.FULL_SET_CSC
    if not all_k_subsets_csc(points, len(points) - 1, Algorithm.TALLEST).all_csc:
        return TrialOutcome.SUBSET_NOT_CSC
    return TrialOutcome.FOUND


def evaluate_trial(cfg: SearchConfig, trial: int) -> TrialResult:
    """Generates and classifies the candidate of one trial."""
    try:
        candidate = generate_candidate(cfg, trial)
    except (InvalidPointSetError, RuntimeError) as e:
        logger.debug(f"Trial {trial}: no usable candidate ({e})")
        return TrialResult(trial, TrialOutcome.NOT_STRICTLY_CONVEX)

    outcome = classify_candidate(candidate)
    logger.debug(f"Trial {trial}: {outcome}")
    if outcome is TrialOutcome.FOUND:
        return TrialResult(trial, outcome, candidate)
    return TrialResult(trial, outcome)


def verify_candidate(trial: int, points: PointSet) -> Optional[SearchFinding]:
    """
    Re-verifies a candidate from scratch and collects its transcript.

    The full set must be NO under both region constructions and every
    single-point deletion must be YES with a verified witness.

    Returns:
        Optional[SearchFinding]: The finding, or None when a check fails.
    """
    if not in_strict_convex_position(points):
        return None
    verdicts = [is_csc_position(points, algorithm) for algorithm in Algorithm]
    if any(v.status is not Verdict.NO for v in verdicts):
        return None

    deletions = []
    for index in range(len(points)):
        rest = points.subset([i for i in range(len(points)) if i != index])
        verdict = is_csc_position(rest, Algorithm.TALLEST)
        if verdict.status is not Verdict.YES:
            return None
        deletions.append(DeletionResult(points.label(index), True, verdict.witness))
    return SearchFinding(trial, points, verdicts[-1], tuple(deletions))


def _statistics(trials: int, results: Sequence[TrialResult]) -> SearchStatistics:
    counts = Counter(r.outcome for r in results)
    return SearchStatistics(
        trials=trials,
        found=counts[TrialOutcome.FOUND],
        not_strictly_convex=counts[TrialOutcome.NOT_STRICTLY_CONVEX],
        full_set_csc=counts[TrialOutcome.FULL_SET_CSC],
        subset_not_csc=counts[TrialOutcome.SUBSET_NOT_CSC],
    )


def run_search(cfg: SearchConfig) -> SearchResult:
    """
    Runs all trials and returns the verified findings in trial order.

    Trials are spread over `cfg.parallelism` worker processes; the merged
    results are ordered by trial index, so the output is the same for every
    degree of parallelism.

    Raises:
        WitnessVerificationError: If a candidate classified as FOUND does not
            survive re-verification.
    """
    logger.info(
        f"Search: {cfg.trials} trials of {cfg.generator}, n={cfg.n}, seed={cfg.seed}, "
        f"{cfg.parallelism} worker(s)"
    )
    if cfg.parallelism == 1:
        results = [evaluate_trial(cfg, trial) for trial in range(cfg.trials)]
    else:
        chunk = max(1, cfg.trials // (4 * cfg.parallelism))
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            results = list(
                pool.map(evaluate_trial, repeat(cfg), range(cfg.trials), chunksize=chunk)
            )
    results.sort(key=lambda r: r.trial)

    findings = []
    for result in results:
        if result.outcome is not TrialOutcome.FOUND:
            continue
        finding = verify_candidate(result.trial, result.points)
        if finding is None:
            logger.error(f"Trial {result.trial} did not survive re-verification")
            raise WitnessVerificationError(
                f"Candidate of trial {result.trial} failed re-verification."
            )
        logger.info(f"Trial {result.trial}: verified finding {finding.points.describe()}")
        findings.append(finding)

    statistics = _statistics(cfg.trials, results)
    logger.info(
        f"Search finished: {statistics.found} found, {statistics.rejected} rejected"
    )
    return SearchResult(tuple(findings), statistics)


def _still_counterexample(points: PointSet) -> bool:
    if not in_strict_convex_position(points):
        return False
    if is_csc_position(points, Algorithm.TALLEST).status is not Verdict.NO:
        return False
    return all_k_subsets_csc(points, len(points) - 1, Algorithm.TALLEST).all_csc


def _with_coordinate(points: PointSet, index: int, axis: str, value: Fraction) -> PointSet:
    p = points[index]
    moved = Point(value, p.y) if axis == "x" else Point(p.x, value)
    return PointSet(
        points.points[:index] + (moved,) + points.points[index + 1 :], points.labels
    )


def shrink_finding(
    finding: SearchFinding, denominators: List[int] = settings.SHRINK_DENOMINATORS
) -> SearchFinding:
    """
    Greedily replaces coordinates by nearby fractions with smaller denominators.

    Each coordinate is tried against `denominators` in ascending order; the
    first rounding that keeps the set a verified counterexample is kept. Passes
    repeat until nothing changes.

    Args:
        finding (SearchFinding): A verified finding.
        denominators (List[int]): Candidate denominator bounds, ascending.

    Returns:
        SearchFinding: The simplified finding with a fresh transcript, or the
        input itself when no rounding verifies.
    """
    current = finding.points
    changed = True
    while changed:
        changed = False
        for index in range(len(current)):
            for axis in ("x", "y"):
                value = getattr(current[index], axis)
                for bound in denominators:
                    if bound >= value.denominator:
                        break
                    try:
                        candidate = _with_coordinate(
                            current, index, axis, value.limit_denominator(bound)
                        )
                    except InvalidPointSetError:
                        continue
                    if _still_counterexample(candidate):
                        logger.debug(
                            f"{current.label(index)}.{axis}: {value} -> "
                            f"{getattr(candidate[index], axis)}"
                        )
                        current = candidate
                        changed = True
                        break

    if current == finding.points:
        return finding
    shrunk = verify_candidate(finding.trial, current)
    if shrunk is None:
        logger.warning("Shrunk set failed re-verification; keeping the original")
        return finding
    return shrunk
