"""Bodies written as the region between a convex floor and a concave ceiling.

A planar convex body ``A`` with vertical projection ``S`` is
``{(x, y): x in S, floor(x) <= y <= ceiling(x)}``. Every function here is
piecewise linear, so extrema, integrals and one-sided slopes are exact
at breakpoints.
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .convex_core import (
    Polytope,
    canonical_hull,
    interval,
    linear_image,
    max_slice,
    project,
    slice_measure,
)
from .errors import (
    DegenerateInput,
    KindMismatch,
    NegativeAmount,
    OutOfDomain,
    PreconditionViolated,
)
from .scalars import RATIONAL, is_exact

CONVEX = "convex"
CONCAVE = "concave"


@dataclass(frozen=True)
class PLFunction:
    """Piecewise-linear function given by sorted ``(x, value)`` breakpoints.

    The first and last breakpoints are the domain endpoints.
    """

    breakpoints: tuple
    kind: str

    def __post_init__(self):
        bp = tuple((x, y) for x, y in self.breakpoints)
        object.__setattr__(self, "breakpoints", bp)
        if len(bp) < 2:
            raise DegenerateInput("a PL function needs at least two breakpoints")
        if any(bp[i][0] >= bp[i + 1][0] for i in range(len(bp) - 1)):
            raise ValueError("breakpoints must be strictly increasing in x")
        if self.kind not in (CONVEX, CONCAVE):
            raise ValueError(f"unknown kind {self.kind!r}")
        if not _slopes_monotone(self.slopes(), self.kind):
            raise KindMismatch(f"breakpoint values are not {self.kind}")

    @classmethod
    def constant(cls, lo, hi, value, kind=CONCAVE):
        return cls(((lo, value), (hi, value)), kind)

    @property
    def xs(self):
        return [p[0] for p in self.breakpoints]

    @property
    def values(self):
        return [p[1] for p in self.breakpoints]

    @property
    def lo(self):
        return self.breakpoints[0][0]

    @property
    def hi(self):
        return self.breakpoints[-1][0]

    @property
    def domain(self) -> Polytope:
        return interval(self.lo, self.hi)

    @property
    def exact(self):
        return all(is_exact(x) and is_exact(y) for x, y in self.breakpoints)

    def slopes(self):
        bp = self.breakpoints
        return [
            _div(bp[i + 1][1] - bp[i][1], bp[i + 1][0] - bp[i][0]) for i in range(len(bp) - 1)
        ]

    def __call__(self, x):
        bp = self.breakpoints
        if x < self.lo or x > self.hi:
            raise OutOfDomain(f"{x} outside [{self.lo}, {self.hi}]")
        xs = self.xs
        i = bisect_left(xs, x)
        if i < len(xs) and xs[i] == x:
            return bp[i][1]
        (x0, y0), (x1, y1) = bp[i - 1], bp[i]
        return y0 + _div((y1 - y0) * (x - x0), x1 - x0)

    def integral(self):
        bp = self.breakpoints
        total = 0
        for (x0, y0), (x1, y1) in zip(bp, bp[1:]):
            total += (x1 - x0) * (y0 + y1)
        return _div(total, 2)

    def negate(self) -> PLFunction:
        flipped = CONVEX if self.kind == CONCAVE else CONCAVE
        return PLFunction(tuple((x, -y) for x, y in self.breakpoints), flipped)

    def shift(self, c) -> PLFunction:
        return PLFunction(tuple((x, y + c) for x, y in self.breakpoints), self.kind)

    def scale_value(self, c) -> PLFunction:
        if c < 0:
            return self.negate().scale_value(-c)
        return PLFunction(tuple((x, y * c) for x, y in self.breakpoints), self.kind)

    def min(self):
        return min(self.values)

    def max(self):
        return max(self.values)

    def with_breakpoints(self, xs) -> PLFunction:
        """Same function evaluated on a refined, sorted breakpoint set."""
        return PLFunction(tuple((x, self(x)) for x in xs), self.kind)


def _div(a, b):
    if is_exact(a) and is_exact(b):
        return Fraction(a) / b
    return a / b


def _slopes_monotone(slopes, kind):
    if kind == CONVEX:
        return all(a <= b for a, b in zip(slopes, slopes[1:]))
    return all(a >= b for a, b in zip(slopes, slopes[1:]))


def merged_xs(*funcs):
    """Union of breakpoint abscissae (functions must share their domain)."""
    return sorted({x for f in funcs for x in f.xs})


def difference(f: PLFunction, g: PLFunction, kind) -> PLFunction:
    xs = merged_xs(f, g)
    return PLFunction(tuple((x, f(x) - g(x)) for x in xs), kind)


@dataclass(frozen=True)
class ShearMap:
    """Volume-preserving linear map sending ``kernel_dir`` to the e0 axis.

    The vertical axis e0 is the last coordinate axis.
    """

    matrix: tuple
    kernel_dir: tuple

    def apply(self, P: Polytope) -> Polytope:
        if self.is_identity:
            return P
        return linear_image(P, self.matrix)

    def apply_point(self, p):
        return tuple(sum(r[k] * p[k] for k in range(len(p))) for r in self.matrix)

    @property
    def is_identity(self):
        n = len(self.matrix)
        return all(self.matrix[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    @property
    def det(self):
        m = self.matrix
        if len(m) == 2:
            return m[0][0] * m[1][1] - m[0][1] * m[1][0]
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def inverse(self) -> ShearMap:
        m = self.matrix
        n = len(m)
        if n == 2:
            d = self.det
            inv = ((_div(m[1][1], d), _div(-m[0][1], d)), (_div(-m[1][0], d), _div(m[0][0], d)))
        else:
            import numpy as np

            inv = tuple(tuple(float(c) for c in row) for row in np.linalg.inv(np.array(m, float)))
        e0 = tuple(1 if i == n - 1 else 0 for i in range(n))
        return ShearMap(inv, e0)


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def shear_normalize(kernel_dir) -> ShearMap:
    """Unimodular map carrying ``kernel_dir`` onto the vertical axis.

    With pivot j (last nonzero coordinate of the direction): if j is the
    last axis the map is the shear ``x_c -> x_c - k_c / k_j * x_last``,
    otherwise a signed axis swap (det +1) is applied first.
    """
    k = tuple(kernel_dir)
    n = len(k)
    if all(c == 0 for c in k):
        raise ValueError("kernel direction must be nonzero")
    j = max(i for i, c in enumerate(k) if c != 0)
    rot = [list(r) for r in _identity(n)]
    if j != n - 1:
        rot[j][j] = 0
        rot[n - 1][n - 1] = 0
        rot[j][n - 1] = 1
        rot[n - 1][j] = -1
    kr = [sum(rot[i][c] * k[c] for c in range(n)) for i in range(n)]
    shear = [list(r) for r in _identity(n)]
    for c in range(n - 1):
        shear[c][n - 1] = -_div(kr[c], kr[n - 1])
    mat = tuple(
        tuple(sum(shear[i][t] * rot[t][c] for t in range(n)) for c in range(n)) for i in range(n)
    )
    return ShearMap(mat, k)


@dataclass(frozen=True)
class GraphBody:
    """Planar body between a convex ``floor`` and a concave ``ceiling``.

    ``frame`` maps original coordinates to the frame where the projection
    kernel is vertical. ``flat`` marks zero-thickness intermediates
    (ceiling equal to floor everywhere), which are not Polytopes.
    """

    floor: PLFunction
    ceiling: PLFunction
    frame: ShearMap | None = None
    flat: bool = False

    def __post_init__(self):
        if self.floor.kind != CONVEX or self.ceiling.kind != CONCAVE:
            raise KindMismatch("floor must be convex and ceiling concave")
        if (self.floor.lo, self.floor.hi) != (self.ceiling.lo, self.ceiling.hi):
            raise ValueError("floor and ceiling must share the domain")
        gap = [self.ceiling(x) - self.floor(x) for x in merged_xs(self.floor, self.ceiling)]
        if min(gap) < 0:
            raise ValueError("floor exceeds ceiling")
        object.__setattr__(self, "flat", all(g == 0 for g in gap))

    @property
    def domain(self) -> Polytope:
        return self.floor.domain

    @property
    def volume(self):
        return self.ceiling.integral() - self.floor.integral()

    def translate_vertical(self, c) -> GraphBody:
        return GraphBody(self.floor.shift(c), self.ceiling.shift(c), self.frame)


def from_polytope(P: Polytope, kernel_dir=None) -> GraphBody:
    """Floor/ceiling description of a planar body w.r.t. ``kernel_dir``.

    The body is first sheared so the kernel is vertical; the shear is kept
    in ``frame`` so ``to_polytope`` can undo it.
    """
    if P.dim != 2:
        raise DegenerateInput("graph bodies are planar")
    if kernel_dir is None:
        kernel_dir = (0, 1)
    frame = shear_normalize(kernel_dir)
    Q = frame.apply(P)
    vs = Q.vertices
    n = len(vs)
    xmax = max(v[0] for v in vs)
    xmin = vs[0][0]
    r = next(i for i in range(n) if vs[i][0] == xmax)
    r2 = r + 1 if r + 1 < n and vs[r + 1][0] == xmax else r
    lower = list(vs[: r + 1])
    upper = []
    i = r2
    while True:
        upper.append(vs[i])
        if vs[i][0] == xmin:
            break
        i = (i + 1) % n
    upper.reverse()
    return GraphBody(
        PLFunction(tuple(lower), CONVEX),
        PLFunction(tuple(upper), CONCAVE),
        None if frame.is_identity else frame,
    )


def to_polytope(G: GraphBody) -> Polytope:
    if G.flat:
        raise DegenerateInput("flat graph body has empty interior")
    pts = list(G.floor.breakpoints) + list(G.ceiling.breakpoints)
    P = canonical_hull(pts)
    if G.frame is not None:
        P = G.frame.inverse().apply(P)
    return P


def stretch(G: GraphBody, h) -> GraphBody:
    """Raise the ceiling by ``h >= 0``; volume grows by ``h * |domain|``."""
    if h < 0:
        raise NegativeAmount(f"stretch amount {h} is negative")
    return GraphBody(G.floor, G.ceiling.shift(h), G.frame)


def chord_gap(G: GraphBody) -> PLFunction:
    """Fibre length ``ceiling - floor`` as a concave PL function."""
    return difference(G.ceiling, G.floor, CONCAVE)


def compress_to_floor(G: GraphBody):
    """Maximal vertical compression: returns ``(core, alpha)``.

    ``alpha`` is the smallest fibre length; ``stretch(core, alpha) == G``.
    """
    alpha = chord_gap(G).min()
    return GraphBody(G.floor, G.ceiling.shift(-alpha), G.frame), alpha


def compression(G: GraphBody) -> GraphBody:
    """The rearranged body ``0 <= y <= ceiling - floor`` (same volume)."""
    gap = chord_gap(G)
    zero = PLFunction.constant(gap.lo, gap.hi, 0 * gap.values[0], CONVEX)
    return GraphBody(zero, gap, G.frame)


def epigraph_split(G: GraphBody):
    """Cut a stretched body at the level between floor and ceiling.

    The level ``t`` is the midpoint of ``max(floor)`` and ``min(ceiling)``.
    Returns ``(upper, lower)`` as graph bodies resting on height 0:
    ``upper`` has ceiling ``ceiling - t`` and ``lower`` has ceiling
    ``t - floor`` (the part below ``t`` reflected upward).
    """
    top_floor = G.floor.max()
    low_ceiling = G.ceiling.min()
    if not top_floor < low_ceiling:
        raise PreconditionViolated(
            f"floor reaches {top_floor} but ceiling drops to {low_ceiling}; stretch first"
        )
    t = _div(top_floor + low_ceiling, 2)
    upper_ceiling = G.ceiling.shift(-t)
    lower_ceiling = G.floor.shift(-t).negate()
    zero_u = PLFunction.constant(G.floor.lo, G.floor.hi, 0 * t, CONVEX)
    return (
        GraphBody(zero_u, upper_ceiling, G.frame),
        GraphBody(zero_u, lower_ceiling, G.frame),
    )


def subdifferential_1d(F: PLFunction, x):
    """``[left slope, right slope]`` of a convex PL function at ``x``.

    A missing side at a domain endpoint is reported as -inf / +inf.
    """
    if F.kind != CONVEX:
        raise KindMismatch("subdifferential_1d expects a convex function; pass negate()")
    if x < F.lo or x > F.hi:
        raise OutOfDomain(f"{x} outside [{F.lo}, {F.hi}]")
    xs = F.xs
    slopes = F.slopes()
    left_i = bisect_left(xs, x) - 1
    right_i = bisect_right(xs, x) - 1
    s_minus = slopes[left_i] if left_i >= 0 else -math.inf
    s_plus = slopes[right_i] if right_i < len(slopes) else math.inf
    return s_minus, s_plus


def transpose(P: Polytope) -> Polytope:
    return canonical_hull([(v[1], v[0]) for v in P.vertices], field=P.field)


def find_shear(A: Polytope) -> ShearMap:
    """Projection direction whose image of ``A`` is the chord on the x-axis.

    ``A`` must have its longest horizontal chord on ``y = 0``. With ``u``
    and ``v`` the left and right boundary (x as a function of y), any
    slope ``s`` in ``∂u(0) ∩ -∂(-v)(0)`` gives supporting lines through
    both chord endpoints; the midpoint of that interval is used and the
    kernel is ``(s, 1)``.
    """
    if A.dim != 2:
        raise PreconditionViolated("find_shear is planar")
    axis = (0, 1)
    _, best = max_slice(A, axis)
    if slice_measure(A, axis, 0) != best:
        raise PreconditionViolated("the chord on y = 0 is not a longest horizontal chord")
    G = from_polytope(transpose(A))
    u, v = G.floor, G.ceiling
    u_minus, u_plus = subdifferential_1d(u, 0)
    p, q = subdifferential_1d(v.negate(), 0)
    lo, hi = max(u_minus, -q), min(u_plus, -p)
    if lo > hi or math.isinf(lo) or math.isinf(hi):
        raise PreconditionViolated(f"empty or unbounded slope interval [{lo}, {hi}]")
    s = _div(lo + hi, 2)
    shear = ShearMap(((1, -s), (0, 1)), (s, 1))
    if A.field == RATIONAL:
        assert project(A, shear.kernel_dir).vertices == _chord_interval(A).vertices
    return shear


def feasible_slopes(A: Polytope):
    """The closed slope interval ``∂u(0) ∩ -∂(-v)(0)`` used by find_shear."""
    G = from_polytope(transpose(A))
    u_minus, u_plus = subdifferential_1d(G.floor, 0)
    p, q = subdifferential_1d(G.ceiling.negate(), 0)
    return max(u_minus, -q), min(u_plus, -p)


def _chord_interval(A: Polytope):
    from .convex_core import slice as section

    return section(A, (0, 1), 0)
