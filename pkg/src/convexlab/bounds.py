"""Brunn-Minkowski and Bonnesen lower bounds for |A + B|.

In the plane every comparison is exact: the Brunn-Minkowski value
``(sqrt(a) + sqrt(b))**2`` is compared by isolating the radical and
squaring, and the Bonnesen value is rational. Higher dimensions fall back
to floats (or 50-digit mpmath for exact inputs) with a 1e-12 margin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .convex_core import (
    Polytope,
    canonical_hull,
    max_slice,
    minkowski_sum,
    project,
    volume,
)
from .errors import (
    HypothesisViolated,
    KindMismatch,
    NonPositiveInput,
    NonPositiveVolume,
    PreconditionViolated,
)
from .graph_body import CONCAVE, PLFunction
from .scalars import exact_root, format_fraction, is_exact

ROOT_MARGIN = 1e-12
FLOAT_TOL = 1e-9

PROJECTION = "projection"
SLICE = "slice"


def _all_exact(*vals):
    return all(is_exact(v) for v in vals)


def bm_bound(volA, volB, d: int):
    """``(volA**(1/d) + volB**(1/d))**d``; exact whenever the roots are."""
    if not (volA > 0 and volB > 0):
        raise NonPositiveVolume(f"volumes must be positive, got {volA}, {volB}")
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if d == 1:
        return volA + volB
    if _all_exact(volA, volB):
        ra, rb = exact_root(Fraction(volA), d), exact_root(Fraction(volB), d)
        if ra is not None and rb is not None:
            return (ra + rb) ** d
    return (float(volA) ** (1.0 / d) + float(volB) ** (1.0 / d)) ** d


def compare_bm(x, volA, volB, d: int) -> int:
    """Sign of ``x - bm_bound(volA, volB, d)``.

    Exact for rational input in d <= 2; otherwise evaluated at 50 digits
    (exact input) or in doubles, with ties declared inside a relative
    margin of 1e-12.
    """
    if not (volA > 0 and volB > 0):
        raise NonPositiveVolume(f"volumes must be positive, got {volA}, {volB}")
    if _all_exact(x, volA, volB):
        a, b, x = Fraction(volA), Fraction(volB), Fraction(x)
        if d == 1:
            return (x > a + b) - (x < a + b)
        if d == 2:
            r = x - a - b
            if r < 0:
                return -1
            lhs, rhs = r * r, 4 * a * b
            return (lhs > rhs) - (lhs < rhs)
        ra, rb = exact_root(a, d), exact_root(b, d)
        if ra is not None and rb is not None:
            bm = (ra + rb) ** d
            return (x > bm) - (x < bm)
        with mpmath.workdps(50):
            bm = (mpmath.root(mpmath.mpf(a.numerator) / a.denominator, d)
                  + mpmath.root(mpmath.mpf(b.numerator) / b.denominator, d)) ** d
            diff = mpmath.mpf(x.numerator) / x.denominator - bm
            if abs(diff) <= ROOT_MARGIN * max(1, abs(bm)):
                return 0
            return 1 if diff > 0 else -1
    bm = bm_bound(volA, volB, d)
    diff = float(x) - float(bm)
    if abs(diff) <= ROOT_MARGIN * max(1.0, abs(float(bm))):
        return 0
    return 1 if diff > 0 else -1


def bonnesen_value(volA, volB, M, N, d: int):
    """``(M**(1/(d-1)) + N**(1/(d-1)))**(d-1) * (volA/M + volB/N)``.

    For d = 1 the coefficients take their limiting values and the bound is
    ``volA + volB``. Exact rational when d = 2.
    """
    if d == 1:
        return bm_bound(volA, volB, 1)
    for v in (volA, volB, M, N):
        if not v > 0:
            raise NonPositiveInput(f"inputs must be positive, got {v}")
    if _all_exact(volA, volB, M, N):
        a, b, M, N = (Fraction(v) for v in (volA, volB, M, N))
        rM, rN = exact_root(M, d - 1), exact_root(N, d - 1)
        if rM is not None and rN is not None:
            return (rM + rN) ** (d - 1) * (a / M + b / N)
    e = 1.0 / (d - 1)
    M, N = float(M), float(N)
    return (M**e + N**e) ** (d - 1) * (float(volA) / M + float(volB) / N)


def refinement_compare(volA, volB, M, N, d: int):
    """(Bonnesen >= Brunn-Minkowski, equality condition holds).

    The equality condition ``M * |B|**((d-1)/d) == N * |A|**((d-1)/d)`` is
    tested in the power form ``M**d * |B|**(d-1) == N**d * |A|**(d-1)``.
    """
    bon = bonnesen_value(volA, volB, M, N, d)
    dominates = compare_bm(bon, volA, volB, d) >= 0
    assert dominates, "Bonnesen value fell below the Brunn-Minkowski value"
    if _all_exact(volA, volB, M, N):
        lhs = Fraction(M) ** d * Fraction(volB) ** (d - 1)
        rhs = Fraction(N) ** d * Fraction(volA) ** (d - 1)
        condition = lhs == rhs
    else:
        lhs = float(M) ** d * float(volB) ** (d - 1)
        rhs = float(N) ** d * float(volA) ** (d - 1)
        condition = math.isclose(lhs, rhs, rel_tol=ROOT_MARGIN)
    return dominates, condition


# ---------------------------------------------------------------------------
# the quantitative lemmas


def hypograph(f: PLFunction) -> Polytope:
    """``{(x, y): x in dom f, 0 <= y <= f(x)}`` for a concave ``f >= 0``."""
    if f.kind != CONCAVE:
        raise KindMismatch("expected a concave function")
    if f.min() < 0:
        raise PreconditionViolated("function must be nonnegative")
    pts = [(f.lo, 0 * f.lo), (f.hi, 0 * f.hi)] + list(f.breakpoints)
    return canonical_hull(pts)


def _require_concave(*funcs):
    for f in funcs:
        if f.kind != CONCAVE:
            raise KindMismatch("lemma bounds need concave functions")


def lemma_delta_bound(f: PLFunction, g: PLFunction, check=True):
    """Bonnesen bound plus the defect term ``delta`` for two hypographs.

    ``f`` lives on an interval of length m, ``g`` on one of length n.
    ``delta = (n f(right end) - n/m int f) + (m g(left end) - m/n int g)``.
    Returns ``(delta, bound)``; with ``check`` the bound is verified
    against the exact area of the sum of the two hypographs.
    """
    _require_concave(f, g)
    m, n = f.hi - f.lo, g.hi - g.lo
    If, Ig = f.integral(), g.integral()
    delta = (n * f(f.hi) - n * If / m) + (m * g(g.lo) - m * Ig / n)
    bound = (m + n) * (If / m + Ig / n) + delta
    if check:
        actual = volume(minkowski_sum(hypograph(f), hypograph(g)))
        assert actual >= bound, f"|A+B| = {actual} < {bound}"
    return delta, bound


@dataclass(frozen=True)
class SeparablePL:
    """``f(x1, x2) = first(x1) + second(x2)`` on a square ``[lo, lo + m]**2``.

    Each part is concave and piecewise linear, so ``f`` is concave and
    affine on every cell of the breakpoint grid; its slopes in the first
    coordinate direction are exactly those of ``first``.
    """

    first: PLFunction
    second: PLFunction

    def __post_init__(self):
        _require_concave(self.first, self.second)
        if self.first.hi - self.first.lo != self.second.hi - self.second.lo:
            raise ValueError("separable parts must live on intervals of equal length")

    @property
    def side(self):
        return self.first.hi - self.first.lo

    def __call__(self, x1, x2):
        return self.first(x1) + self.second(x2)

    def integral(self):
        return self.side * (self.first.integral() + self.second.integral())

    def hypograph(self) -> Polytope:
        pts = []
        for x1 in self.first.xs:
            for x2 in self.second.xs:
                h = self(x1, x2)
                if h < 0:
                    raise PreconditionViolated("function must be nonnegative")
                pts.append((float(x1), float(x2), float(h)))
                pts.append((float(x1), float(x2), 0.0))
        return canonical_hull(pts)


def _e1_slopes(f):
    if isinstance(f, SeparablePL):
        return f.first.slopes()
    return f.slopes()


def slope_gap(f, g):
    """Largest eps with ``f'(x; e1) >= g'(y; e1) + eps`` everywhere.

    For concave PL functions the binding pair is f's last slope against
    g's first slope.
    """
    return min(_e1_slopes(f)) - max(_e1_slopes(g))


def lemma_eps_bound(f, g, eps, d: int = 2, check=True):
    """Bonnesen bound strengthened by ``(mn/2) (m+n)**(d-2) eps``.

    d = 2 takes PLFunction hypographs; d = 3 takes SeparablePL functions
    on squares. Raises HypothesisViolated (with the offending slope pair)
    unless every e1-slope of ``f`` exceeds every e1-slope of ``g`` by eps.
    """
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    if d == 2:
        _require_concave(f, g)
        m, n = f.hi - f.lo, g.hi - g.lo
    elif d == 3:
        if not (isinstance(f, SeparablePL) and isinstance(g, SeparablePL)):
            raise TypeError("d = 3 needs SeparablePL functions")
        m, n = f.side, g.side
    else:
        raise ValueError("lemma_eps_bound supports d = 2 and d = 3")
    fmin, gmax = min(_e1_slopes(f)), max(_e1_slopes(g))
    if fmin < gmax + eps:
        raise HypothesisViolated(
            f"slope {fmin} of f is below slope {gmax} of g plus {eps}", witness=(fmin, gmax)
        )
    If, Ig = f.integral(), g.integral()
    base = (m + n) ** (d - 1) * (If / m ** (d - 1) + Ig / n ** (d - 1))
    half = Fraction(1, 2) if _all_exact(m, n, eps) else 0.5
    bound = base + m * n * (m + n) ** (d - 2) * eps * half
    if check:
        if d == 2:
            actual = volume(minkowski_sum(hypograph(f), hypograph(g)))
            assert actual >= bound, f"|A+B| = {actual} < {bound}"
        else:
            actual = volume(minkowski_sum(f.hypograph(), g.hypograph()))
            assert actual >= float(bound) - FLOAT_TOL * max(1.0, actual), (actual, bound)
    return bound


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class BoundReport:
    """All measured quantities and bound values for one pair (A, B).

    Exact mode keeps volumes, M, N, the Bonnesen value and its gap as
    Fractions; the Brunn-Minkowski value may be irrational, so it and its
    gap are floats while ``bm_ok`` records the exact comparison.
    """

    volA: object
    volB: object
    volSum: object
    M: object
    N: object
    source: str
    bm_bound: object
    bonnesen_bound: object
    gap_bm: object
    gap_bonnesen: object
    equality_bonnesen: bool
    mode: str
    dim: int
    bm_ok: bool
    bonnesen_ok: bool
    bonnesen_dominates_bm: bool

    @property
    def chain_ok(self):
        return self.bm_ok and self.bonnesen_ok and self.bonnesen_dominates_bm

    CSV_HEADER = ("volA", "volB", "volSum", "M", "N", "bm", "bonnesen",
                  "gap_bm", "gap_bonnesen", "equality")

    def csv_row(self):
        def r(v):
            return f"{float(v):.12g}"

        return [r(self.volA), r(self.volB), r(self.volSum), r(self.M), r(self.N),
                r(self.bm_bound), r(self.bonnesen_bound), r(self.gap_bm),
                r(self.gap_bonnesen), "true" if self.equality_bonnesen else "false"]

    def to_json(self):
        def s(v):
            if isinstance(v, (int, Fraction)):
                return format_fraction(v)
            return float(v)

        return {
            "volA": s(self.volA), "volB": s(self.volB), "volSum": s(self.volSum),
            "M": s(self.M), "N": s(self.N), "source": self.source,
            "bm": s(self.bm_bound), "bonnesen": s(self.bonnesen_bound),
            "gap_bm": s(self.gap_bm), "gap_bonnesen": s(self.gap_bonnesen),
            "equality": self.equality_bonnesen, "mode": self.mode, "dim": self.dim,
            "chain_ok": self.chain_ok,
        }


def measure_pair(A: Polytope, B: Polytope, direction, mode=PROJECTION):
    """(M, N) for the pair: projections along, or sections orthogonal to, ``direction``."""
    if mode == PROJECTION:
        return volume(project(A, direction)), volume(project(B, direction))
    if mode == SLICE:
        return max_slice(A, direction)[1], max_slice(B, direction)[1]
    raise ValueError(f"unknown mode {mode!r}")


def full_report(A: Polytope, B: Polytope, kernel_dir, mode=PROJECTION, tol=FLOAT_TOL,
                sum_body=None) -> BoundReport:
    """Evaluate |A+B| and every bound for one pair.

    ``mode="projection"`` takes M, N as projections along ``kernel_dir``;
    ``mode="slice"`` takes maximal sections orthogonal to it.
    """
    d = A.dim
    S = sum_body if sum_body is not None else minkowski_sum(A, B)
    a, b, s = volume(A), volume(B), volume(S)
    M, N = measure_pair(A, B, kernel_dir, mode)
    bm = bm_bound(a, b, d)
    bon = bonnesen_value(a, b, M, N, d)
    exact = _all_exact(a, b, s, M, N)
    if exact:
        gap = s - bon
        equality = gap == 0
        bonnesen_ok = gap >= 0
    else:
        gap = float(s) - float(bon)
        scale = max(1.0, abs(float(s)))
        equality = abs(gap) <= tol * scale
        bonnesen_ok = gap >= -tol * scale
    bm_ok = compare_bm(s, a, b, d) >= 0
    dominates = compare_bm(bon, a, b, d) >= 0
    return BoundReport(
        volA=a, volB=b, volSum=s, M=M, N=N, source=mode,
        bm_bound=bm, bonnesen_bound=bon,
        gap_bm=(s - bm) if isinstance(bm, Fraction) and exact else float(s) - float(bm),
        gap_bonnesen=gap, equality_bonnesen=equality,
        mode="exact" if exact else "float", dim=d,
        bm_ok=bm_ok, bonnesen_ok=bonnesen_ok, bonnesen_dominates_bm=dominates,
    )
