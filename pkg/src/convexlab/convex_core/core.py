"""Operations on convex polytopes.

Planar rational bodies are handled exactly on an integer lattice. Bodies
in R^3 (and planar float bodies) use IEEE doubles.

Measures of projections and hyperplane sections are taken in a fixed
coordinate chart: for a direction ``k`` let ``j`` be the last index with
``k[j] != 0``; a point ``x`` is charted by the coordinates
``x[c] - k[c] / k[j] * x[j]`` for ``c != j``. Projection along ``k`` and
sections orthogonal to ``k`` are both measured in that chart, so their
measures differ from Euclidean ones by one common factor per direction.
The Bonnesen quantities are invariant under such a common factor.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction

import numpy as np

from ..errors import DegenerateInput, DimensionMismatch, FieldMismatch
from ..scalars import FLOAT, RATIONAL, exact_root, exact_sqrt, is_exact
from . import _space3d, kernels
from .polytope import EmptySlice, HomothetyWitness, Polytope, interval, to_lattice

CROSSCHECK_SUMS = bool(os.environ.get("CONVEXLAB_DEBUG"))


# ---------------------------------------------------------------------------
# construction


def _infer_field(points, field):
    flat = [c for p in points for c in p]
    exact = [is_exact(c) for c in flat]
    if field is None:
        if all(exact):
            return RATIONAL
        if not any(exact):
            return FLOAT
        raise FieldMismatch("points mix exact and floating-point coordinates")
    if field == RATIONAL and not all(exact):
        raise FieldMismatch("rational field requested for floating-point input")
    return field


def canonical_hull(points, field=None) -> Polytope:
    """Convex hull of ``points`` in canonical form.

    Planar output is CCW starting at the lexicographically least vertex.
    Raises DegenerateInput when the hull has empty interior.
    """
    points = [tuple(p) for p in points]
    if not points:
        raise DegenerateInput("no points")
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise DimensionMismatch("points of different dimension")
    if dim == 3:
        return Polytope(3, FLOAT, array=_space3d.hull3(points))
    field = _infer_field(points, field)
    if len(points) < dim + 1:
        raise DegenerateInput(f"need at least {dim + 1} points in dimension {dim}")
    if dim == 1:
        vals = [p[0] for p in points]
        return interval(min(vals), max(vals), field)
    if dim != 2:
        raise DimensionMismatch(f"unsupported dimension {dim}")
    if field == RATIONAL:
        xs, dx = to_lattice([p[0] for p in points])
        ys, dy = to_lattice([p[1] for p in points])
        den = math.lcm(dx, dy)
        xs = [x * (den // dx) for x in xs]
        ys = [y * (den // dy) for y in ys]
        hx, hy = kernels.hull2(xs, ys)
        if len(hx) < 3:
            raise DegenerateInput("points are collinear")
        return Polytope(2, RATIONAL, lattice=(hx, hy, den))
    hx, hy = kernels.hull2([float(p[0]) for p in points], [float(p[1]) for p in points])
    if len(hx) < 3 or kernels.area2(hx, hy) <= 0:
        raise DegenerateInput("points are collinear")
    return Polytope(2, FLOAT, vertices=list(zip(hx, hy)))


def polygon_from_lattice(xs, ys, den) -> Polytope:
    """Trusted constructor for a canonical lattice polygon."""
    return Polytope(2, RATIONAL, lattice=(xs, ys, den))


def as_float(P: Polytope) -> Polytope:
    if P.field == FLOAT:
        return P
    return Polytope(P.dim, FLOAT, vertices=[tuple(float(c) for c in v) for v in P.vertices])


# ---------------------------------------------------------------------------
# measure


def volume(P: Polytope):
    """Lebesgue measure: exact for rational bodies, float otherwise."""
    if P.dim == 1:
        return P.vertices[1][0] - P.vertices[0][0]
    if P.dim == 2:
        if P.field == RATIONAL:
            xs, ys, den = P.lattice()
            return Fraction(kernels.area2(xs, ys), 2 * den * den)
        xs, ys = P.xy()
        return kernels.area2(xs, ys) / 2.0
    return _space3d.volume3(P.array())


def centroid(P: Polytope):
    """Mean of the extreme points.

    Homotheties map extreme points onto extreme points, so this point is
    carried along by any homothety; that is all the homothety search needs.
    """
    vs = P.vertices
    n = len(vs)
    if P.field == RATIONAL:
        return tuple(sum((v[i] for v in vs), Fraction(0)) / n for i in range(P.dim))
    return tuple(float(sum(v[i] for v in vs)) / n for i in range(P.dim))


def mass_centroid(P: Polytope):
    """Centroid of the solid body; insensitive to near-duplicate vertices."""
    if P.dim == 1:
        return ((P.vertices[0][0] + P.vertices[1][0]) / 2,)
    if P.dim == 3:
        return _space3d.mass_centroid3(P.array())
    xs, ys = P.xy()
    n = len(xs)
    a = cx = cy = 0
    for i in range(n):
        j = (i + 1) % n
        c = xs[i] * ys[j] - xs[j] * ys[i]
        a += c
        cx += (xs[i] + xs[j]) * c
        cy += (ys[i] + ys[j]) * c
    return cx / (3 * a), cy / (3 * a)


# ---------------------------------------------------------------------------
# affine maps


def _check_pair(A: Polytope, B: Polytope):
    if A.dim != B.dim:
        raise DimensionMismatch(f"dimensions {A.dim} and {B.dim} differ")
    if A.field != B.field:
        raise FieldMismatch(f"fields {A.field} and {B.field} differ")


def _common_lattice(A: Polytope, B: Polytope):
    ax, ay, da = A.lattice()
    bx, by, db = B.lattice()
    den = math.lcm(da, db)
    fa, fb = den // da, den // db
    if fa != 1:
        ax, ay = [x * fa for x in ax], [y * fa for y in ay]
    if fb != 1:
        bx, by = [x * fb for x in bx], [y * fb for y in by]
    return ax, ay, bx, by, den


def translate(P: Polytope, v) -> Polytope:
    if len(v) != P.dim:
        raise DimensionMismatch("translation vector has wrong length")
    if P.field == RATIONAL:
        v = [Fraction(c) for c in v]
        if P.dim == 1:
            return interval(P.vertices[0][0] + v[0], P.vertices[1][0] + v[0])
        xs, ys, den = P.lattice()
        L = math.lcm(den, v[0].denominator, v[1].denominator)
        f = L // den
        tx = v[0].numerator * (L // v[0].denominator)
        ty = v[1].numerator * (L // v[1].denominator)
        return polygon_from_lattice([x * f + tx for x in xs], [y * f + ty for y in ys], L)
    v = np.asarray(v, dtype=float)
    if P.dim == 3:
        return Polytope(3, FLOAT, array=P.array() + v)
    return Polytope(P.dim, FLOAT, vertices=[tuple(float(c + d) for c, d in zip(p, v)) for p in P.vertices])


def dilate(P: Polytope, lam) -> Polytope:
    """``lam * P`` for ``lam > 0`` (canonical order is preserved)."""
    if not lam > 0:
        raise ValueError("dilation factor must be positive")
    if P.field == RATIONAL:
        lam = Fraction(lam)
        if P.dim == 1:
            return interval(P.vertices[0][0] * lam, P.vertices[1][0] * lam)
        xs, ys, den = P.lattice()
        p, q = lam.numerator, lam.denominator
        return polygon_from_lattice([x * p for x in xs], [y * p for y in ys], den * q)
    lam = float(lam)
    if P.dim == 3:
        return Polytope(3, FLOAT, array=P.array() * lam)
    return Polytope(P.dim, FLOAT, vertices=[tuple(c * lam for c in p) for p in P.vertices])


def homothetic_image(P: Polytope, lam, x0) -> Polytope:
    return translate(dilate(P, lam), x0)


def linear_image(P: Polytope, L) -> Polytope:
    """Image of ``P`` under the square matrix ``L`` (rows act on columns)."""
    n = P.dim
    if len(L) != n or any(len(r) != n for r in L):
        raise DimensionMismatch("matrix must be dim x dim")
    if P.field == RATIONAL:
        L = [[Fraction(c) for c in row] for row in L]
        det = L[0][0] if n == 1 else L[0][0] * L[1][1] - L[0][1] * L[1][0]
    else:
        L = [[float(c) for c in row] for row in L]
        det = float(np.linalg.det(np.array(L)))
    if det == 0:
        raise DegenerateInput("singular map: use project() for projections")
    pts = [tuple(sum(L[i][k] * v[k] for k in range(n)) for i in range(n)) for v in P.vertices]
    return canonical_hull(pts, field=P.field)


def minkowski_sum(A: Polytope, B: Polytope, check=None) -> Polytope:
    """Minkowski sum A + B.

    Planar sums use the edge-merge kernel. With ``check`` (default: the
    ``CONVEXLAB_DEBUG`` environment flag) the result is compared against
    the hull of all pairwise vertex sums.
    """
    _check_pair(A, B)
    if A.dim == 1:
        return interval(
            A.vertices[0][0] + B.vertices[0][0], A.vertices[1][0] + B.vertices[1][0], A.field
        )
    if A.dim == 3:
        a, b = A.array(), B.array()
        sums = (a[:, None, :] + b[None, :, :]).reshape(-1, 3)
        return Polytope(3, FLOAT, array=_space3d.hull3(sums))
    if A.field == RATIONAL:
        ax, ay, bx, by, den = _common_lattice(A, B)
        sx, sy = kernels.minkowski2(ax, ay, bx, by)
        S = polygon_from_lattice(sx, sy, den)
    else:
        ax, ay = A.xy()
        bx, by = B.xy()
        sx, sy = kernels.minkowski2(ax, ay, bx, by)
        S = Polytope(2, FLOAT, vertices=list(zip(sx, sy)))
    if CROSSCHECK_SUMS if check is None else check:
        ref = pairwise_sum_hull(A, B)
        if A.field == RATIONAL:
            assert S == ref, f"edge-merge sum {S} != pairwise hull {ref}"
        else:
            assert abs(volume(S) - volume(ref)) <= 1e-9 * max(1.0, volume(ref))
    return S


def pairwise_sum_hull(A: Polytope, B: Polytope) -> Polytope:
    """Hull of all vertex sums: the brute-force reference for A + B."""
    _check_pair(A, B)
    pts = [tuple(a + b for a, b in zip(p, q)) for p in A.vertices for q in B.vertices]
    return canonical_hull(pts, field=A.field)


# ---------------------------------------------------------------------------
# directions, projections, sections


def _direction(vec, P: Polytope):
    """Normalise a direction for ``P``'s field.

    Exact bodies get a primitive integer vector ``k`` and the positive
    factor ``c`` with ``vec = c * k``. Float bodies keep ``vec``, c = 1.
    """
    if len(vec) != P.dim:
        raise DimensionMismatch("direction has wrong length")
    if P.field == RATIONAL:
        if not all(is_exact(c) for c in vec):
            raise FieldMismatch("exact bodies need an exact direction")
        fr = [Fraction(c) for c in vec]
        if all(c == 0 for c in fr):
            raise ValueError("direction must be nonzero")
        L = math.lcm(*(c.denominator for c in fr))
        ints = [int(c * L) for c in fr]
        g = math.gcd(*ints)
        k = [i // g for i in ints]
        return k, Fraction(g, L)
    v = [float(c) for c in vec]
    if all(c == 0 for c in v):
        raise ValueError("direction must be nonzero")
    return v, 1


def _pivot(k):
    return max(i for i, c in enumerate(k) if c != 0)


def chart(point, k):
    """Chart coordinates of ``point`` for direction ``k`` (see module doc)."""
    j = _pivot(k)
    return tuple(point[c] - k[c] * point[j] / k[j] for c in range(len(k)) if c != j)


def project(P: Polytope, kernel_dir) -> Polytope:
    """Image of ``P`` under projection along ``kernel_dir`` (dim - 1 body)."""
    k, _ = _direction(kernel_dir, P)
    if P.dim == 2:
        a, b = k
        if P.field == RATIONAL:
            xs, ys, den = P.lattice()
            if b != 0:
                vals = [b * x - a * y for x, y in zip(xs, ys)]
                lo, hi = min(vals), max(vals)
                scale = b * den
                if scale < 0:
                    lo, hi, scale = -hi, -lo, -scale
                return interval(Fraction(lo, scale), Fraction(hi, scale))
            return interval(Fraction(min(ys), den), Fraction(max(ys), den))
        vals = [chart(v, k)[0] for v in P.vertices]
        return interval(min(vals), max(vals), FLOAT)
    if P.dim == 3:
        pts = [chart(v, k) for v in P.vertices]
        return canonical_hull(pts, field=FLOAT)
    raise DimensionMismatch("projection needs a body of dimension 2 or 3")


def _slice_frame(P: Polytope, k):
    """Planar lattice/float frame where sections become horizontal chords.

    Returns (qs, ss, qscale, level_scale): q is the chart coordinate times
    ``qscale`` and s is ``k . x`` times ``level_scale``.
    """
    a, b = k
    if P.field == RATIONAL:
        xs, ys, den = P.lattice()
        ss = [a * x + b * y for x, y in zip(xs, ys)]
        if b != 0:
            qs = [b * x - a * y for x, y in zip(xs, ys)]
            return qs, ss, b * den, den
        return list(ys), ss, den, den
    xs, ys = P.xy()
    ss = [a * x + b * y for x, y in zip(xs, ys)]
    qs = [x - a * y / b for x, y in zip(xs, ys)] if b != 0 else list(ys)
    return qs, ss, 1.0, 1.0


def _frac(pair):
    num, den = pair
    return Fraction(num) / den if isinstance(num, (int, Fraction)) else num / den


def slice(P: Polytope, H_normal, offset):
    """Section ``P ∩ {x : H_normal . x = offset}`` in chart coordinates.

    Returns a Polytope of dimension ``dim - 1`` or an EmptySlice marker.
    """
    k, c = _direction(H_normal, P)
    if P.dim == 2:
        qs, ss, qscale, lscale = _slice_frame(P, k)
        level = (Fraction(offset) / c if P.field == RATIONAL else float(offset)) * lscale
        if level < min(ss) or level > max(ss):
            return EmptySlice(touching=False)
        ext = kernels.level_extent(qs, ss, level)
        lo, hi = _frac(ext[0]) / qscale, _frac(ext[1]) / qscale
        if lo > hi:
            lo, hi = hi, lo
        if lo == hi:
            return EmptySlice(touching=True)
        return interval(lo, hi, P.field)
    if P.dim == 3:
        return _slice3(P, k, float(offset))
    raise DimensionMismatch("sections need a body of dimension 2 or 3")


def slice_measure(P: Polytope, H_normal, offset):
    S = slice(P, H_normal, offset)
    return 0 if isinstance(S, EmptySlice) else volume(S)


def _slice3(P, k, t, tol=1e-12):
    arr = P.array()
    kv = np.asarray(k, dtype=float)
    s = arr @ kv
    if t < s.min() - tol or t > s.max() + tol:
        return EmptySlice(touching=False)
    pts = [arr[i] for i in range(len(arr)) if abs(s[i] - t) <= tol]
    for i in range(len(arr)):
        for j in range(len(arr)):
            if s[i] < t - tol and s[j] > t + tol:
                w = (t - s[i]) / (s[j] - s[i])
                pts.append(arr[i] + w * (arr[j] - arr[i]))
    charted = [chart(p, k) for p in pts]
    if len(charted) < 3:
        return EmptySlice(touching=bool(charted))
    xs = [float(p[0]) for p in charted]
    ys = [float(p[1]) for p in charted]
    hx, hy = kernels.hull2(xs, ys)
    if len(hx) < 3 or kernels.area2(hx, hy) <= 1e-24:
        return EmptySlice(touching=True)
    return Polytope(2, FLOAT, vertices=list(zip(hx, hy)))


def max_slice(P: Polytope, H_normal):
    """(offset, measure) of the largest section orthogonal to ``H_normal``.

    Planar: the chord length is concave and piecewise linear in the offset,
    so every vertex offset is evaluated exactly and the smallest maximiser
    returned. In R^3 the square root of the section area is concave; vertex
    offsets are scanned and the best bracket refined by ternary search down
    to width 1e-12, which is an approximation rather than a certificate.
    """
    k, c = _direction(H_normal, P)
    if P.dim == 2:
        qs, ss, qscale, lscale = _slice_frame(P, k)
        level, lo, hi = kernels.max_chord(qs, ss)
        length = abs(_frac(hi) - _frac(lo)) / abs(qscale)
        if P.field == RATIONAL:
            return Fraction(level, lscale) * c, length
        return level / lscale, length
    if P.dim == 3:
        return _max_slice3(P, k)
    raise DimensionMismatch("sections need a body of dimension 2 or 3")


def _max_slice3(P, k, width=1e-12):
    s = np.unique(P.array() @ np.asarray(k, dtype=float))

    def f(t):
        S = _slice3(P, k, t)
        return 0.0 if isinstance(S, EmptySlice) else math.sqrt(volume(S))

    vals = [f(t) for t in s]
    i = int(np.argmax(vals))
    lo = s[max(i - 1, 0)]
    hi = s[min(i + 1, len(s) - 1)]
    best_t, best_v = s[i], vals[i]
    while hi - lo > width:
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if f(m1) < f(m2):
            lo = m1
        else:
            hi = m2
    mid = 0.5 * (lo + hi)
    vm = f(mid)
    if vm > best_v:
        best_t, best_v = mid, vm
    return float(best_t), best_v * best_v


def align_max_slice(P: Polytope, H_normal) -> Polytope:
    """Translate ``P`` so its largest section lies in the hyperplane through 0."""
    t, _ = max_slice(P, H_normal)
    if P.field == RATIONAL:
        n = [Fraction(c) for c in H_normal]
        nn = sum(c * c for c in n)
    else:
        n = [float(c) for c in H_normal]
        nn = sum(c * c for c in n)
    return translate(P, [-t * c / nn for c in n])


# ---------------------------------------------------------------------------
# Hausdorff distance and homothety


def _point_polygon_dist2(px, py, xs, ys):
    n = len(xs)
    inside = True
    best = None
    for i in range(n):
        ax, ay = xs[i], ys[i]
        bx, by = xs[(i + 1) % n], ys[(i + 1) % n]
        ex, ey = bx - ax, by - ay
        rx, ry = px - ax, py - ay
        if ex * ry - ey * rx < 0:
            inside = False
        dot = rx * ex + ry * ey
        len2 = ex * ex + ey * ey
        if dot <= 0:
            d = rx * rx + ry * ry
        elif dot >= len2:
            d = (px - bx) ** 2 + (py - by) ** 2
        elif isinstance(len2, int):
            d = Fraction((rx * rx + ry * ry) * len2 - dot * dot, len2)
        else:
            d = (rx * rx + ry * ry) - dot * dot / len2
        if best is None or d < best:
            best = d
    return 0 if inside else best


def hausdorff_distance_squared(P: Polytope, Q: Polytope):
    """Squared Hausdorff distance; exact for rational bodies.

    For convex bodies the distance to the other body is a convex function,
    so its supremum over a polytope is attained at a vertex.
    """
    if P.dim != Q.dim:
        raise DimensionMismatch(f"dimensions {P.dim} and {Q.dim} differ")
    if P.field != Q.field:
        P, Q = as_float(P), as_float(Q)
    if P.dim == 1:
        (a0,), (a1,) = P.vertices
        (b0,), (b1,) = Q.vertices
        d = max(abs(a0 - b0), abs(a1 - b1))
        return d * d
    if P.dim == 2:
        if P.field == RATIONAL:
            px, py, qx, qy, den = _common_lattice(P, Q)
            scale = den * den
        else:
            (px, py), (qx, qy) = P.xy(), Q.xy()
            scale = 1.0
        best = 0
        for x, y in zip(px, py):
            best = max(best, _point_polygon_dist2(x, y, qx, qy))
        for x, y in zip(qx, qy):
            best = max(best, _point_polygon_dist2(x, y, px, py))
        return Fraction(best, scale) if P.field == RATIONAL else best / scale
    a, b = P.array(), Q.array()
    ha, hb = _space3d.convex_hull(a), _space3d.convex_hull(b)
    d = max(
        max(_space3d.point_distance(p, b, hb) for p in a),
        max(_space3d.point_distance(q, a, ha) for q in b),
    )
    return d * d


def hausdorff_distance(P: Polytope, Q: Polytope):
    """Hausdorff distance; an exact rational when one exists, else float."""
    d2 = hausdorff_distance_squared(P, Q)
    if isinstance(d2, Fraction):
        r = exact_sqrt(d2)
        if r is not None:
            return r
    return math.sqrt(float(d2))


def homothety_candidate(S: Polytope, T: Polytope) -> HomothetyWitness:
    """The only possible homothety ``S = lam * T + x0`` and its residual.

    ``lam`` comes from the volume ratio, ``x0`` from matching centroids.
    Exact when both bodies are rational and the ratio has a rational root.
    """
    _check_pair(S, T)
    k = S.dim
    ratio = volume(S) / volume(T)
    lam = exact_root(ratio, k) if S.field == RATIONAL else None
    if lam is not None:
        cs, ct = centroid(S), centroid(T)
        x0 = tuple(a - lam * b for a, b in zip(cs, ct))
        image = homothetic_image(T, lam, x0)
        if image == S:
            return HomothetyWitness(lam, x0, Fraction(0))
        return HomothetyWitness(lam, x0, hausdorff_distance(image, S))
    Sf, Tf = as_float(S), as_float(T)
    lam = float(ratio) ** (1.0 / k)
    # float vertex lists may carry near-duplicates; use the solid centroid
    cs, ct = mass_centroid(Sf), mass_centroid(Tf)
    x0 = tuple(a - lam * b for a, b in zip(cs, ct))
    image = homothetic_image(Tf, lam, x0)
    return HomothetyWitness(lam, x0, hausdorff_distance(image, Sf))


def homothety_find(S: Polytope, T: Polytope, tol=0):
    """Witness for ``S = lam * T + x0`` with residual <= tol, else None."""
    w = homothety_candidate(S, T)
    return w if w.residual <= tol else None
