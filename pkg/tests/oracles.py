"""Independent reference computations used to check the library.

Nothing here imports convexlab: each helper recomputes a quantity by a
different, slower route (gift wrapping, pairwise sums, brute scanning,
shapely, Monte Carlo).
"""
import math
import random
from fractions import Fraction

import numpy as np
from shapely.geometry import MultiPoint, Point, Polygon


def frac_points(pts):
    return [(Fraction(x), Fraction(y)) for x, y in pts]


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def jarvis_hull(pts):
    """Gift wrapping; strict CCW hull from the lexicographic minimum."""
    pts = sorted(set(pts))
    if len(pts) < 3:
        return pts
    start = pts[0]
    hull = [start]
    cur = start
    while True:
        cand = pts[0] if pts[0] != cur else pts[1]
        for p in pts:
            if p == cur:
                continue
            c = cross(cur, cand, p)
            if c < 0:
                cand = p
            elif c == 0:
                # keep the farthest collinear point
                d1 = (cand[0] - cur[0]) ** 2 + (cand[1] - cur[1]) ** 2
                d2 = (p[0] - cur[0]) ** 2 + (p[1] - cur[1]) ** 2
                if d2 > d1:
                    cand = p
        cur = cand
        if cur == start:
            break
        hull.append(cur)
    return hull


def shoelace(pts):
    n = len(pts)
    s = sum(pts[i][0] * pts[(i + 1) % n][1] - pts[(i + 1) % n][0] * pts[i][1] for i in range(n))
    return Fraction(s) / 2 if isinstance(s, (int, Fraction)) else s / 2


def minkowski_brute(A, B):
    return jarvis_hull([(a[0] + b[0], a[1] + b[1]) for a in A for b in B])


def shapely_sum_area(A, B):
    pts = [(float(a[0] + b[0]), float(a[1] + b[1])) for a in A for b in B]
    return MultiPoint(pts).convex_hull.area


def chord_at(pts, level):
    """Length of the horizontal section at height ``level`` (exact)."""
    xs = []
    n = len(pts)
    for i in range(n):
        (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % n]
        if y0 == y1:
            if y0 == level:
                xs += [x0, x1]
            continue
        if min(y0, y1) <= level <= max(y0, y1):
            xs.append(x0 + (x1 - x0) * Fraction(level - y0) / (y1 - y0))
    return max(xs) - min(xs) if xs else None


def max_chord_brute(pts):
    """(lowest maximising height, length) over all vertex heights."""
    best = None
    for y in sorted({p[1] for p in pts}):
        c = chord_at(pts, y)
        if best is None or c > best[1]:
            best = (y, c)
    return best


def projection_length(pts, k):
    """Chart length of the shadow along ``k = (a, b)``: x - (a/b) y, or y if b = 0."""
    a, b = k
    if b == 0:
        vals = [p[1] for p in pts]
    else:
        vals = [p[0] - Fraction(a) / b * p[1] for p in pts]
    return max(vals) - min(vals)


def hausdorff_shapely(P, Q):
    """Exact-enough d_H for convex polygons: extremes sit at vertices."""
    PP = Polygon([(float(x), float(y)) for x, y in P])
    QQ = Polygon([(float(x), float(y)) for x, y in Q])
    d1 = max(QQ.distance(Point(float(x), float(y))) for x, y in P)
    d2 = max(PP.distance(Point(float(x), float(y))) for x, y in Q)
    return max(d1, d2)


def pl_integral(bp):
    return sum((x1 - x0) * (y0 + y1) for (x0, y0), (x1, y1) in zip(bp, bp[1:])) / Fraction(2)


def monte_carlo_volume(eq, lo, hi, samples, seed=0):
    """Fraction of uniform samples in the box satisfying ``eq @ [x, 1] <= 0``."""
    rng = np.random.default_rng(seed)
    pts = rng.uniform(lo, hi, size=(samples, len(lo)))
    inside = np.all(pts @ eq[:, :-1].T + eq[:, -1] <= 0, axis=1)
    return float(np.prod(np.asarray(hi) - np.asarray(lo))) * inside.mean()


def regular_polygon_area(k, r=1.0):
    return k / 2 * r * r * math.sin(2 * math.pi / k)


def random_lattice_points(rng: random.Random, n, q):
    return [(Fraction(rng.randint(-q, q), q), Fraction(rng.randint(-q, q), q)) for _ in range(n)]
