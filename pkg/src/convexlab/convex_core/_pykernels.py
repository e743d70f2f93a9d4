"""Pure-Python planar kernels.

Every function takes parallel coordinate sequences and works for any
ordered numeric type (int, Fraction, float). The exact 2D path feeds
them integer lattice coordinates; the compiled module mirrors these
signatures for int64 input.
"""


def hull2(xs, ys):
    """Strict convex hull, CCW, starting at the lexicographic minimum.

    Collinear and duplicate points are dropped. Degenerate inputs give
    fewer than three vertices; callers decide whether that is an error.
    """
    pts = sorted(set(zip(xs, ys)))
    if len(pts) <= 2:
        return [p[0] for p in pts], [p[1] for p in pts]

    def half(seq):
        out = []
        for px, py in seq:
            while len(out) >= 2:
                ox, oy = out[-2]
                ax, ay = out[-1]
                if (ax - ox) * (py - oy) - (ay - oy) * (px - ox) <= 0:
                    out.pop()
                else:
                    break
            out.append((px, py))
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    chain = lower[:-1] + upper[:-1]
    return [p[0] for p in chain], [p[1] for p in chain]


def area2(xs, ys):
    """Twice the signed area (positive for CCW input)."""
    n = len(xs)
    x0, y0 = xs[0], ys[0]
    total = 0
    for i in range(1, n - 1):
        ax, ay = xs[i] - x0, ys[i] - y0
        bx, by = xs[i + 1] - x0, ys[i + 1] - y0
        total += ax * by - ay * bx
    return total


def _edges(xs, ys):
    n = len(xs)
    return [(xs[(i + 1) % n] - xs[i], ys[(i + 1) % n] - ys[i]) for i in range(n)]


def _before(d, e):
    """Angular order on (-90deg, 270deg]; None when d and e are parallel."""
    hd = 0 if d[0] > 0 else 1
    he = 0 if e[0] > 0 else 1
    if hd != he:
        return hd < he
    c = d[0] * e[1] - d[1] * e[0]
    if c > 0:
        return True
    if c < 0:
        return False
    if d[0] * e[0] + d[1] * e[1] > 0:
        return None
    # antiparallel verticals inside the left half: up precedes down
    return d[1] > 0


def minkowski2(ax, ay, bx, by):
    """Edge-merge Minkowski sum of two canonical CCW polygons."""
    ea = _edges(ax, ay)
    eb = _edges(bx, by)
    i = j = 0
    na, nb = len(ea), len(eb)
    merged = []
    while i < na and j < nb:
        order = _before(ea[i], eb[j])
        if order is None:
            merged.append((ea[i][0] + eb[j][0], ea[i][1] + eb[j][1]))
            i += 1
            j += 1
        elif order:
            merged.append(ea[i])
            i += 1
        else:
            merged.append(eb[j])
            j += 1
    merged.extend(ea[i:])
    merged.extend(eb[j:])
    x, y = ax[0] + bx[0], ay[0] + by[0]
    sx, sy = [], []
    for dx, dy in merged[:-1]:
        sx.append(x)
        sy.append(y)
        x += dx
        y += dy
    sx.append(x)
    sy.append(y)
    return sx, sy


def _level_extent(xs, ys, level):
    """Leftmost and rightmost x of the polygon at height ``level``.

    Returned as ((num_l, den_l), (num_r, den_r)) with positive
    denominators, or None if the level misses the polygon.
    """
    n = len(xs)
    lo = hi = None
    for i in range(n):
        px, py = xs[i], ys[i]
        qx, qy = xs[(i + 1) % n], ys[(i + 1) % n]
        if py == qy:
            if py == level:
                cands = ((px, 1), (qx, 1))
            else:
                continue
        else:
            if level < min(py, qy) or level > max(py, qy):
                continue
            den = qy - py
            num = px * den + (level - py) * (qx - px)
            if den < 0:
                num, den = -num, -den
            cands = ((num, den),)
        for c in cands:
            if lo is None or c[0] * lo[1] < lo[0] * c[1]:
                lo = c
            if hi is None or c[0] * hi[1] > hi[0] * c[1]:
                hi = c
    if lo is None:
        return None
    return lo, hi


def max_chord(xs, ys):
    """Longest horizontal chord of a convex polygon.

    Chord length is concave and piecewise linear in the height, so the
    maximum sits at a vertex height. Returns ``(level, left, right)``
    for the lowest maximising level, endpoints as (num, den) pairs.
    """
    best = None
    for level in sorted(set(ys)):
        lo, hi = _level_extent(xs, ys, level)
        num = hi[0] * lo[1] - lo[0] * hi[1]
        den = hi[1] * lo[1]
        if best is None or num * best[1] > best[0] * den:
            best = (num, den, level, lo, hi)
    return best[2], best[3], best[4]


def level_extent(xs, ys, level):
    return _level_extent(xs, ys, level)
