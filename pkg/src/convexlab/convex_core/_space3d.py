"""Float-mode helpers for polytopes in R^3 (hull via Qhull)."""
import numpy as np
from scipy.spatial import ConvexHull, QhullError

from ..errors import DegenerateInput

VOLUME_EPS = 1e-12


def hull3(points):
    """Extreme points of a 3D point cloud, sorted lexicographically."""
    pts = np.unique(np.asarray(points, dtype=float), axis=0)
    if len(pts) < 4:
        raise DegenerateInput("need at least 4 affinely independent points in 3D")
    try:
        hull = ConvexHull(pts)
    except QhullError as exc:
        raise DegenerateInput(f"3D hull is lower-dimensional: {exc}") from None
    if hull.volume <= VOLUME_EPS:
        raise DegenerateInput("3D hull has (numerically) zero volume")
    ext = pts[np.sort(hull.vertices)]
    order = np.lexsort(ext.T[::-1])
    return ext[order]


def convex_hull(arr):
    return ConvexHull(arr)


def volume3(arr):
    """Sum of tetrahedra over the hull triangles, apexed at the centroid."""
    hull = ConvexHull(arr)
    c = arr.mean(axis=0)
    tri = arr[hull.simplices] - c
    dets = np.einsum("ij,ij->i", tri[:, 0], np.cross(tri[:, 1], tri[:, 2]))
    return float(np.abs(dets).sum() / 6.0)


def mass_centroid3(arr):
    """Centroid of the solid (not of its vertices)."""
    hull = ConvexHull(arr)
    c = arr.mean(axis=0)
    tri = arr[hull.simplices]
    rel = tri - c
    vols = np.abs(np.einsum("ij,ij->i", rel[:, 0], np.cross(rel[:, 1], rel[:, 2])))
    cents = (tri.sum(axis=1) + c) / 4.0
    return tuple(float(v) for v in (vols[:, None] * cents).sum(axis=0) / vols.sum())


def _closest_on_triangle(p, a, b, c):
    ab, ac, ap = b - a, c - a, p - a
    d1, d2 = ab @ ap, ac @ ap
    if d1 <= 0 and d2 <= 0:
        return a
    bp = p - b
    d3, d4 = ab @ bp, ac @ bp
    if d3 >= 0 and d4 <= d3:
        return b
    vc = d1 * d4 - d3 * d2
    if vc <= 0 and d1 >= 0 and d3 <= 0:
        return a + ab * (d1 / (d1 - d3))
    cp = p - c
    d5, d6 = ab @ cp, ac @ cp
    if d6 >= 0 and d5 <= d6:
        return c
    vb = d5 * d2 - d1 * d6
    if vb <= 0 and d2 >= 0 and d6 <= 0:
        return a + ac * (d2 / (d2 - d6))
    va = d3 * d6 - d5 * d4
    if va <= 0 and (d4 - d3) >= 0 and (d5 - d6) >= 0:
        return b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6)))
    denom = 1.0 / (va + vb + vc)
    return a + ab * (vb * denom) + ac * (vc * denom)


def point_distance(p, arr, hull=None):
    """Euclidean distance from ``p`` to the polytope (0 inside)."""
    hull = hull if hull is not None else ConvexHull(arr)
    p = np.asarray(p, dtype=float)
    eq = hull.equations
    if np.all(eq[:, :3] @ p + eq[:, 3] <= 1e-12):
        return 0.0
    best = np.inf
    for s in hull.simplices:
        q = _closest_on_triangle(p, *arr[s])
        best = min(best, float(np.linalg.norm(p - q)))
    return best


def fiber_bounds(arr, xy, hull=None, axis=None):
    """(low, high) of the polytope along ``axis`` above the point ``xy``.

    ``axis`` defaults to the last one; ``xy`` holds the remaining
    coordinates in increasing axis order. Works in the plane as well.
    Facets that are vertical up to rounding are ignored, so the result is
    stable for points on the boundary of the shadow.
    """
    hull = hull if hull is not None else ConvexHull(arr)
    eq = hull.equations
    dim = eq.shape[1] - 1
    axis = dim - 1 if axis is None else axis
    others = [i for i in range(dim) if i != axis]
    rhs = -(eq[:, others] @ np.asarray(xy, dtype=float) + eq[:, dim])
    coef = eq[:, axis]
    up = coef > 1e-12
    down = coef < -1e-12
    hi = np.min(rhs[up] / coef[up])
    lo = np.max(rhs[down] / coef[down])
    return float(lo), float(hi)


def vertex_fibres(arr):
    """Fibre ``(low, high)`` along the last axis above every vertex."""
    hull = ConvexHull(arr)
    return [fiber_bounds(arr, p[:-1], hull) for p in arr]
