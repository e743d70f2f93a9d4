"""Immutable value types: Polytope, HomothetyWitness, EmptySlice."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..scalars import FLOAT, RATIONAL


def to_lattice(values):
    """Write a list of rationals as (integer numerators, common denominator)."""
    den = math.lcm(*(Fraction(v).denominator for v in values)) if values else 1
    nums = []
    for v in values:
        v = Fraction(v)
        nums.append(v.numerator * (den // v.denominator))
    return nums, den


class Polytope:
    """A full-dimensional convex polytope stored by its extreme points.

    Planar rational polytopes keep their vertices as integer numerators
    over one shared denominator; the Fraction view in ``vertices`` is
    built on first access. Build instances with ``canonical_hull`` rather
    than calling the constructor.
    """

    __slots__ = ("dim", "field", "_verts", "_lat", "_arr", "_vol")

    def __init__(self, dim, field, vertices=None, lattice=None, array=None):
        self.dim = dim
        self.field = field
        self._verts = None if vertices is None else tuple(tuple(v) for v in vertices)
        self._lat = None
        self._arr = None
        self._vol = None
        if lattice is not None:
            xs, ys, den = lattice
            g = math.gcd(den, *xs, *ys)
            if g > 1:
                xs = [x // g for x in xs]
                ys = [y // g for y in ys]
                den //= g
            self._lat = (tuple(xs), tuple(ys), den)
        if array is not None:
            self._arr = np.asarray(array, dtype=float)
            if self._verts is None:
                self._verts = tuple(tuple(float(c) for c in row) for row in self._arr)

    # -- views -------------------------------------------------------------
    @property
    def vertices(self):
        if self._verts is None:
            xs, ys, den = self._lat
            self._verts = tuple(
                (Fraction(x, den), Fraction(y, den)) for x, y in zip(xs, ys)
            )
        return self._verts

    @property
    def exact(self):
        return self.field == RATIONAL

    def lattice(self):
        """(xs, ys, den) for a planar rational polytope."""
        if self._lat is None:
            if self.dim != 2 or self.field != RATIONAL:
                raise TypeError("lattice view exists only for planar rational polytopes")
            xs, den_x = to_lattice([v[0] for v in self._verts])
            ys, den_y = to_lattice([v[1] for v in self._verts])
            den = math.lcm(den_x, den_y)
            xs = [x * (den // den_x) for x in xs]
            ys = [y * (den // den_y) for y in ys]
            self._lat = (tuple(xs), tuple(ys), den)
        return self._lat

    def xy(self):
        vs = self.vertices
        return [v[0] for v in vs], [v[1] for v in vs]

    def array(self):
        if self._arr is None:
            self._arr = np.array([[float(c) for c in v] for v in self.vertices])
        return self._arr

    def __len__(self):
        return len(self.vertices)

    @property
    def volume(self):
        if self._vol is None:
            from .core import volume

            self._vol = volume(self)
        return self._vol

    # -- value semantics ---------------------------------------------------
    def _key(self):
        if self.dim == 2 and self.field == RATIONAL:
            return self.lattice()
        return self.vertices

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        if (self.dim, self.field) != (other.dim, other.field):
            return False
        if self.dim == 2 and self.field == RATIONAL:
            return self.lattice() == other.lattice()
        return self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dim, self.field, self._key()))

    def __repr__(self):
        def fmt(c):
            return str(c) if isinstance(c, Fraction) else repr(c)

        pts = ", ".join("(" + ", ".join(fmt(c) for c in v) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, field={self.field!r}, [{pts}])"


@dataclass(frozen=True)
class HomothetyWitness:
    """Certifies ``S = lam * T + x0`` up to Hausdorff distance ``residual``."""

    lam: object
    x0: tuple
    residual: object

    def __post_init__(self):
        if not self.lam > 0:
            raise ValueError("homothety ratio must be positive")
        if self.residual < 0:
            raise ValueError("residual must be nonnegative")

    @property
    def exact(self):
        return self.residual == 0


@dataclass(frozen=True)
class EmptySlice:
    """Marker for a hyperplane that misses the body or only touches it.

    ``touching`` is True when the intersection is a nonempty set of lower
    dimension (a vertex or an edge parallel to the plane in 3D).
    """

    touching: bool = False
    measure: int = 0


def interval(lo, hi, field=None):
    """1D polytope [lo, hi]."""
    if field is None:
        field = RATIONAL if not isinstance(lo, float) and not isinstance(hi, float) else FLOAT
    if field == RATIONAL:
        lo, hi = Fraction(lo), Fraction(hi)
    else:
        lo, hi = float(lo), float(hi)
    if not lo < hi:
        from ..errors import DegenerateInput

        raise DegenerateInput(f"interval [{lo}, {hi}] has empty interior")
    return Polytope(1, field, vertices=((lo,), (hi,)))
