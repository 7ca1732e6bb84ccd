"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import assume
from hypothesis import strategies as st

from src.geometry import Point, orientation
from src.regions import HalfPlane

small_ints = st.integers(min_value=-20, max_value=20)
rationals = st.fractions(
    min_value=Fraction(-30), max_value=Fraction(30), max_denominator=12
)


@st.composite
def points(draw, coordinates=rationals) -> Point:
    return Point(draw(coordinates), draw(coordinates))


@st.composite
def triangles(draw):
    """Three non-collinear points with small integer coordinates."""
    a, b, c = draw(st.lists(points(small_ints), min_size=3, max_size=3, unique=True))
    assume(orientation(a, b, c) != 0)
    return a, b, c


@st.composite
def halfplanes(draw) -> HalfPlane:
    a = draw(st.integers(min_value=-4, max_value=4))
    b = draw(st.integers(min_value=-4, max_value=4))
    assume(a != 0 or b != 0)
    return HalfPlane(a, b, draw(st.integers(min_value=-8, max_value=8)))
