"""Hypothesis strategies for exact planar bodies."""
from fractions import Fraction

from hypothesis import assume
from hypothesis import strategies as st

from convexlab.convex_core import canonical_hull
from convexlab.errors import DegenerateInput


@st.composite
def lattice_points(draw, min_size=3, max_size=12, bound=20):
    q = draw(st.integers(1, 7))
    n = draw(st.integers(min_size, max_size))
    coords = st.integers(-bound, bound)
    return [(Fraction(draw(coords), q), Fraction(draw(coords), q)) for _ in range(n)]


@st.composite
def polygons(draw, max_size=10, bound=20):
    pts = draw(lattice_points(max_size=max_size, bound=bound))
    try:
        return canonical_hull(pts)
    except DegenerateInput:
        assume(False)


directions = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda k: k != (0, 0))
positive_rationals = st.builds(Fraction, st.integers(1, 20), st.integers(1, 8))
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 8))
