"""
Deterministic SVG rendering of point sets, hulls, admissible regions and
witness centers.

Coordinates stay exact rationals until the very last step, where they are
rounded to a fixed number of decimals with integer arithmetic, so the same
scene always produces the same bytes. Unbounded cells are drawn clipped to
the viewport; each cell's true constraint list is written as a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union
from xml.sax.saxutils import escape

from loguru import logger

from core.config import settings
from core.serialization import parse_rational, write_text
from src.geometry import Point, PointSet, convex_hull
from src.regions import Cell, HalfPlane, Region

POINT_RADIUS = 4
STYLE = (
    ".cell{fill:#4c9be8;fill-opacity:0.35;stroke:#1f5fa8;stroke-width:1}"
    ".hull{fill:none;stroke:#333;stroke-width:1.5}"
    ".reflected-hull{fill:none;stroke:#c0392b;stroke-width:1;stroke-dasharray:4 3}"
    ".points{fill:#111}"
    ".reflected{fill:#c0392b}"
    ".witness{fill:#e67e22;stroke:#111;stroke-width:1}"
    "text{font-family:monospace;font-size:12px}"
)


@dataclass(frozen=True)
class Viewport:
    """Rational bounding box shown by the scene."""

    xmin: Fraction
    ymin: Fraction
    xmax: Fraction
    ymax: Fraction

    @property
    def width(self) -> Fraction:
        return self.xmax - self.xmin

    @property
    def height(self) -> Fraction:
        return self.ymax - self.ymin

    def as_cell(self) -> Cell:
        return Cell.of(
            [
                HalfPlane(-1, 0, -self.xmin),
                HalfPlane(1, 0, self.xmax),
                HalfPlane(0, -1, -self.ymin),
                HalfPlane(0, 1, self.ymax),
            ]
        )


class SvgScene:
    """
    A layered drawing: region cells, hull outlines, point sets and a witness.

    Layers are drawn in that order regardless of the order they were added in.
    The viewport is fitted to every point and witness with a relative margin.

    Usage:
        >>> scene = SvgScene()
        >>> scene.add_points(points)
        >>> scene.add_hull(points)
        >>> scene.add_region(region)
        >>> svg = scene.render()
    """

    def __init__(
        self,
        size: int = settings.SVG_SIZE,
        margin: Union[str, Fraction] = settings.SVG_MARGIN,
        decimals: int = settings.SVG_DECIMALS,
    ) -> None:
        self.size: int = size
        self.margin: Fraction = parse_rational(margin)
        self.decimals: int = decimals
        self._regions: List[Region] = []
        self._hulls: List[Tuple[Tuple[Point, ...], str]] = []
        self._points: List[Tuple[PointSet, str]] = []
        self._witness: Optional[Point] = None

    def add_points(self, points: PointSet, css: str = "points") -> None:
        self._points.append((points, css))

    def add_hull(self, points: Sequence[Point], css: str = "hull") -> None:
        self._hulls.append((convex_hull(points).hull, css))

    def add_region(self, region: Region) -> None:
        self._regions.append(region)

    def set_witness(self, witness: Optional[Point]) -> None:
        self._witness = witness

    def viewport(self) -> Viewport:
        """Bounding box of all points and the witness, widened by the margin."""
        everything = [p for points, _ in self._points for p in points]
        everything += [p for hull, _ in self._hulls for p in hull]
        if self._witness is not None:
            everything.append(self._witness)
        if not everything:
            everything = [Point(0, 0)]

        xmin = min(p.x for p in everything)
        xmax = max(p.x for p in everything)
        ymin = min(p.y for p in everything)
        ymax = max(p.y for p in everything)
        pad = max(xmax - xmin, ymax - ymin) * self.margin or Fraction(1)
        return Viewport(xmin - pad, ymin - pad, xmax + pad, ymax + pad)

    def _number(self, value: Fraction) -> str:
        unit = 10**self.decimals
        scaled = round(value * unit)
        sign = "-" if scaled < 0 else ""
        whole, rest = divmod(abs(scaled), unit)
        if self.decimals == 0:
            return f"{sign}{whole}"
        return f"{sign}{whole}.{rest:0{self.decimals}d}"

    def _map(self, view: Viewport, p: Point) -> Tuple[str, str]:
        factor = Fraction(self.size) / max(view.width, view.height)
        return (
            self._number((p.x - view.xmin) * factor),
            self._number((view.ymax - p.y) * factor),
        )

    def _cell_elements(self, view: Viewport, index: int, cell: Cell) -> List[str]:
        elements = [f"<!-- cell {index}: {cell} -->"]
        corners = cell.intersect(view.as_cell()).vertices()
        mapped = [self._map(view, p) for p in corners]
        if len(mapped) >= 3:
            path = " ".join(f"{x},{y}" for x, y in mapped)
            elements.append(f'<polygon class="cell" points="{path}"/>')
        elif len(mapped) == 2:
            (x1, y1), (x2, y2) = mapped
            elements.append(
                f'<line class="cell" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'
            )
        elif len(mapped) == 1:
            x, y = mapped[0]
            elements.append(f'<circle class="cell" cx="{x}" cy="{y}" r="2"/>')
        return elements

    def render(self) -> str:
        """The SVG 1.1 document as a string."""
        view = self.viewport()
        factor = Fraction(self.size) / max(view.width, view.height)
        width = self._number(view.width * factor)
        height = self._number(view.height * factor)

        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
            f"<style>{STYLE}</style>",
            '<g id="region">',
        ]
        index = 0
        for region in self._regions:
            for cell in region:
                lines.extend(self._cell_elements(view, index, cell))
                index += 1
        lines.append("</g>")

        lines.append('<g id="hulls">')
        for hull, css in self._hulls:
            path = " ".join(f"{x},{y}" for x, y in (self._map(view, p) for p in hull))
            lines.append(f'<polygon class="{css}" points="{path}"/>')
        lines.append("</g>")

        lines.append('<g id="points">')
        for points, css in self._points:
            for i, p in enumerate(points):
                x, y = self._map(view, p)
                lines.append(f'<circle class="{css}" cx="{x}" cy="{y}" r="{POINT_RADIUS}"/>')
                if points.labels is not None:
                    lines.append(
                        f'<text x="{x}" y="{y}" dx="6" dy="-6">{escape(points.label(i))}</text>'
                    )
        lines.append("</g>")

        if self._witness is not None:
            x, y = self._map(view, self._witness)
            lines.append(f"<!-- witness {self._witness} -->")
            lines.append(f'<circle class="witness" cx="{x}" cy="{y}" r="{POINT_RADIUS + 2}"/>')

        lines.append("</svg>")
        return "\n".join(lines)

    def save(self, path: Union[str, Path]) -> None:
        write_text(path, self.render())
        logger.debug(f"Scene with {len(self._points)} point layer(s) saved to {path}")
