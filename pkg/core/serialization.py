"""
JSON file formats and exact number parsing.

Every document carries a top-level "format" tag. Numbers are written as
exact rational strings ("p/q" or "p"); on input, decimal strings such as
"0.93" are also accepted and converted exactly. Floats and scientific
notation are rejected.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Dict, List, Optional, Tuple, Union

from loguru import logger
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    PlainSerializer,
    ValidationError,
    field_validator,
    model_validator,
)

from core.config import settings
from core.errors import ParseError
from src.geometry import Point, PointSet
from src.regions import Cell, HalfPlane, Region

_RATIO = re.compile(r"[+-]?\d+(/\d+)?")
_DECIMAL = re.compile(r"[+-]?\d*\.\d+")


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """
    Parses "p/q", an integer or a plain decimal into an exact Fraction.

    Args:
        value (Union[str, int, Fraction]): The number to parse.

    Returns:
        Fraction: The exact value.

    Raises:
        ParseError: For floats, scientific notation, zero denominators or
            anything else that is not an exact rational literal.

    Example:
        >>> parse_rational("0.93")
        Fraction(93, 100)
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"Expected an exact number, got {value!r}.")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError(f"Expected a number string, got {value!r}.")

    text = value.strip()
    if _RATIO.fullmatch(text):
        numerator, _, denominator = text.partition("/")
        if denominator and int(denominator) == 0:
            raise ParseError(f"Zero denominator in {value!r}.")
        return Fraction(int(numerator), int(denominator or 1))
    if _DECIMAL.fullmatch(text):
        return Fraction(text)
    raise ParseError(f"Not an exact rational: {value!r}.")


Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(str, return_type=str),
]


class _Document(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    format: str = settings.FORMAT_TAG

    @field_validator("format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value != settings.FORMAT_TAG:
            raise ValueError(f"Unsupported format {value!r}, expected {settings.FORMAT_TAG!r}.")
        return value


class PointEntry(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    x: Rational
    y: Rational
    label: Optional[str] = None

    @classmethod
    def from_point(cls, point: Point, label: Optional[str] = None) -> PointEntry:
        return cls(x=point.x, y=point.y, label=label)

    def to_point(self) -> Point:
        return Point(self.x, self.y)


class PointSetFile(_Document):
    """
    {"format": "csc/1", "points": [{"x": "p/q", "y": "p/q", "label": "a1"}, ...]}

    Labels must be given for every point or for none.
    """

    points: List[PointEntry]

    @model_validator(mode="after")
    def _labels_all_or_none(self) -> PointSetFile:
        labeled = [entry.label is not None for entry in self.points]
        if any(labeled) and not all(labeled):
            raise ValueError("Labels must be given for all points or for none.")
        return self

    @classmethod
    def from_point_set(cls, points: PointSet) -> PointSetFile:
        labels = points.labels or (None,) * len(points)
        return cls(
            points=[PointEntry.from_point(p, label) for p, label in zip(points, labels)]
        )

    def to_point_set(self) -> PointSet:
        labels = None
        if self.points and self.points[0].label is not None:
            labels = tuple(entry.label for entry in self.points)
        return PointSet(tuple(entry.to_point() for entry in self.points), labels)


class CellEntry(BaseModel):
    halfplanes: List[Tuple[str, str, str]]

    @field_validator("halfplanes")
    @classmethod
    def _integers(cls, value: List[Tuple[str, str, str]]) -> List[Tuple[str, str, str]]:
        for row in value:
            for number in row:
                if not re.fullmatch(r"[+-]?\d+", number):
                    raise ValueError(f"Half-plane coefficient {number!r} is not an integer.")
        return value


class RegionFile(_Document):
    """
    {"format": "csc/1", "algorithm": "tallest", "triangles": 9,
     "cells": [{"halfplanes": [["a", "b", "c"], ...]}, ...]}

    Each row [a, b, c] is the closed half-plane a*x + b*y <= c.
    """

    algorithm: Optional[str] = None
    triangles: Optional[int] = None
    cells: List[CellEntry]

    @classmethod
    def from_region(
        cls, region: Region, algorithm: Optional[str] = None, triangles: Optional[int] = None
    ) -> RegionFile:
        cells = [
            CellEntry(halfplanes=[(str(h.a), str(h.b), str(h.c)) for h in cell.constraints])
            for cell in region
        ]
        return cls(algorithm=algorithm, triangles=triangles, cells=cells)

    def to_region(self) -> Region:
        return Region.of(
            Cell.of(HalfPlane(int(a), int(b), int(c)) for a, b, c in cell.halfplanes)
            for cell in self.cells
        )


class DeletionEntry(BaseModel):
    label: str
    nonempty: bool
    witness: Optional[PointEntry] = None


class WitnessCheckEntry(BaseModel):
    label: str
    center: PointEntry
    admissible: bool


class NineGonReportFile(_Document):
    passed: bool
    full_set_empty: Dict[str, bool]
    deletions: List[DeletionEntry]
    witness_checks: List[WitnessCheckEntry]
    center_parts_pairwise_empty: List[bool]
    center_parts_common_empty: bool

    @classmethod
    def from_report(cls, report) -> NineGonReportFile:
        return cls(
            passed=report.passed,
            full_set_empty={str(k): v for k, v in report.full_set_empty.items()},
            deletions=[_deletion_entry(d) for d in report.deletions],
            witness_checks=[
                WitnessCheckEntry(
                    label=check.label,
                    center=PointEntry.from_point(check.center),
                    admissible=check.admissible,
                )
                for check in report.witness_checks
            ],
            center_parts_pairwise_empty=list(report.center_parts_pairwise_empty),
            center_parts_common_empty=report.center_parts_common_empty,
        )


class FindingFile(_Document):
    """One search finding: the point set plus its verification transcript."""

    trial: int
    points: List[PointEntry]
    full_verdict: str
    deletions: List[DeletionEntry]

    @classmethod
    def from_finding(cls, finding) -> FindingFile:
        return cls(
            trial=finding.trial,
            points=PointSetFile.from_point_set(finding.points).points,
            full_verdict=str(finding.full_verdict),
            deletions=[_deletion_entry(d) for d in finding.deletions],
        )


class StatisticsFile(_Document):
    trials: int
    found: int
    not_strictly_convex: int
    full_set_csc: int
    subset_not_csc: int


def _deletion_entry(deletion) -> DeletionEntry:
    witness = None
    if deletion.witness is not None:
        witness = PointEntry.from_point(deletion.witness)
    return DeletionEntry(label=deletion.label, nonempty=deletion.nonempty, witness=witness)


def _read_json(path: Union[str, Path]) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError as e:
        logger.error(f"File not found: {path}")
        raise ParseError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON in {path}: {e}")
        raise ParseError(f"Invalid JSON in {path}: {e}") from e


def load_point_set(path: Union[str, Path]) -> PointSet:
    """
    Reads a point-set file.

    Raises:
        ParseError: If the file is missing, is not JSON or does not match the schema.
        InvalidPointSetError: If points or labels repeat.
    """
    try:
        document = PointSetFile.model_validate(_read_json(path))
    except ValidationError as e:
        logger.error(f"Invalid point-set file {path}: {e}")
        raise ParseError(f"Invalid point-set file {path}: {e}") from e
    points = document.to_point_set()
    logger.debug(f"Loaded {len(points)} points from {path}")
    return points


def load_region(path: Union[str, Path]) -> Region:
    """
    Reads a region file.

    Raises:
        ParseError: If the file is missing, is not JSON, does not match the
            schema or contains a half-plane with a zero normal.
    """
    try:
        return RegionFile.model_validate(_read_json(path)).to_region()
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid region file {path}: {e}")
        raise ParseError(f"Invalid region file {path}: {e}") from e


def dump_point_set(points: PointSet) -> str:
    return PointSetFile.from_point_set(points).model_dump_json(indent=2, exclude_none=True)


def dump_region(
    region: Region, algorithm: Optional[str] = None, triangles: Optional[int] = None
) -> str:
    document = RegionFile.from_region(region, algorithm, triangles)
    return document.model_dump_json(indent=2, exclude_none=True)


def dump_report(report) -> str:
    return NineGonReportFile.from_report(report).model_dump_json(indent=2)


def dump_finding(finding) -> str:
    """A single JSON line."""
    return FindingFile.from_finding(finding).model_dump_json(exclude_none=True)


def dump_statistics(statistics) -> str:
    """A single JSON line."""
    return StatisticsFile(
        trials=statistics.trials,
        found=statistics.found,
        not_strictly_convex=statistics.not_strictly_convex,
        full_set_csc=statistics.full_set_csc,
        subset_not_csc=statistics.subset_not_csc,
    ).model_dump_json()


def write_text(path: Union[str, Path], text: str) -> None:
    """Writes `text` plus a trailing newline, logging and re-raising I/O errors."""
    try:
        Path(path).write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        logger.error(f"Failed to write {path}. Error: {str(e)}")
        raise e
    logger.info(f"Wrote {path}")
