# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled planar kernels on int64 lattice coordinates.

Same signatures and results as ``_pykernels`` for Python int input.
Coordinates must stay below ``COORD_LIMIT`` (``CHORD_LIMIT`` for
``max_chord``) so every intermediate product fits the machine types;
larger input raises OverflowError and the dispatcher falls back.
"""
from libc.stdlib cimport malloc, free, qsort

cdef extern from *:
    ctypedef long long i128 "__int128"

ctypedef long long i64

COORD_LIMIT = 1 << 28
CHORD_LIMIT = 1 << 20
cdef i64 _COORD = 1 << 28
cdef i64 _CHORD = 1 << 20


cdef struct Pt:
    i64 x
    i64 y


cdef int _cmp(const void *a, const void *b) noexcept nogil:
    cdef const Pt *p = <const Pt *> a
    cdef const Pt *q = <const Pt *> b
    if p.x != q.x:
        return -1 if p.x < q.x else 1
    if p.y != q.y:
        return -1 if p.y < q.y else 1
    return 0


cdef Pt *_load(xs, ys, i64 limit) except NULL:
    cdef Py_ssize_t n = len(xs), i
    if len(ys) != n:
        raise ValueError("coordinate sequences differ in length")
    cdef Pt *pts = <Pt *> malloc((n + 1) * sizeof(Pt))
    if pts == NULL:
        raise MemoryError()
    cdef object vx, vy
    for i in range(n):
        vx = xs[i]
        vy = ys[i]
        if not (-limit < vx < limit and -limit < vy < limit):
            free(pts)
            raise OverflowError("coordinate outside the compiled kernel range")
        pts[i].x = vx
        pts[i].y = vy
    return pts


cdef inline i64 _cross(Pt o, Pt a, Pt b) noexcept nogil:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def hull2(xs, ys):
    """Strict CCW convex hull starting at the lexicographic minimum."""
    cdef Py_ssize_t n = len(xs), i, m, k, lo_end
    cdef Pt *pts = _load(xs, ys, _COORD)
    cdef Pt *out = NULL
    try:
        qsort(pts, n, sizeof(Pt), _cmp)
        m = 0
        for i in range(n):
            if m == 0 or pts[i].x != pts[m - 1].x or pts[i].y != pts[m - 1].y:
                pts[m] = pts[i]
                m += 1
        if m <= 2:
            return [pts[i].x for i in range(m)], [pts[i].y for i in range(m)]
        out = <Pt *> malloc(2 * m * sizeof(Pt))
        if out == NULL:
            raise MemoryError()
        k = 0
        for i in range(m):
            while k >= 2 and _cross(out[k - 2], out[k - 1], pts[i]) <= 0:
                k -= 1
            out[k] = pts[i]
            k += 1
        lo_end = k + 1
        i = m - 2
        while i >= 0:
            while k >= lo_end and _cross(out[k - 2], out[k - 1], pts[i]) <= 0:
                k -= 1
            out[k] = pts[i]
            k += 1
            i -= 1
        k -= 1
        return [out[i].x for i in range(k)], [out[i].y for i in range(k)]
    finally:
        free(pts)
        if out != NULL:
            free(out)


def area2(xs, ys):
    """Twice the signed area (fan from the first vertex)."""
    cdef Py_ssize_t n = len(xs), i
    cdef Pt *p = _load(xs, ys, _COORD)
    cdef i128 total = 0
    try:
        for i in range(1, n - 1):
            total += <i128> _cross(p[0], p[i], p[i + 1])
        if total > <i128> 0x7FFFFFFFFFFFFFFF or total < -(<i128> 0x7FFFFFFFFFFFFFFF):
            raise OverflowError("area exceeds int64")
        return <i64> total
    finally:
        free(p)


cdef inline int _half(i64 dx) noexcept nogil:
    return 0 if dx > 0 else 1


cdef inline int _before(i64 dx, i64 dy, i64 ex, i64 ey) noexcept nogil:
    """1 if d precedes e, 0 if e precedes d, 2 if parallel."""
    cdef int hd = _half(dx), he = _half(ex)
    if hd != he:
        return 1 if hd < he else 0
    cdef i64 c = dx * ey - dy * ex
    if c > 0:
        return 1
    if c < 0:
        return 0
    if dx * ex + dy * ey > 0:
        return 2
    return 1 if dy > 0 else 0


def minkowski2(ax, ay, bx, by):
    """Edge-merge Minkowski sum of two canonical CCW polygons."""
    cdef Py_ssize_t na = len(ax), nb = len(bx), i = 0, j = 0, k = 0, t
    cdef Pt *a = _load(ax, ay, _COORD)
    cdef Pt *b = NULL
    cdef Pt *ea = NULL
    cdef Pt *eb = NULL
    cdef Pt *em = NULL
    cdef int order
    cdef i64 x, y
    try:
        b = _load(bx, by, _COORD)
        ea = <Pt *> malloc(na * sizeof(Pt))
        eb = <Pt *> malloc(nb * sizeof(Pt))
        em = <Pt *> malloc((na + nb) * sizeof(Pt))
        if ea == NULL or eb == NULL or em == NULL:
            raise MemoryError()
        for t in range(na):
            ea[t].x = a[(t + 1) % na].x - a[t].x
            ea[t].y = a[(t + 1) % na].y - a[t].y
        for t in range(nb):
            eb[t].x = b[(t + 1) % nb].x - b[t].x
            eb[t].y = b[(t + 1) % nb].y - b[t].y
        while i < na and j < nb:
            order = _before(ea[i].x, ea[i].y, eb[j].x, eb[j].y)
            if order == 2:
                em[k].x = ea[i].x + eb[j].x
                em[k].y = ea[i].y + eb[j].y
                i += 1
                j += 1
            elif order == 1:
                em[k] = ea[i]
                i += 1
            else:
                em[k] = eb[j]
                j += 1
            k += 1
        while i < na:
            em[k] = ea[i]
            i += 1
            k += 1
        while j < nb:
            em[k] = eb[j]
            j += 1
            k += 1
        x = a[0].x + b[0].x
        y = a[0].y + b[0].y
        sx = [x]
        sy = [y]
        for t in range(k - 1):
            x += em[t].x
            y += em[t].y
            sx.append(x)
            sy.append(y)
        return sx, sy
    finally:
        free(a)
        if b != NULL:
            free(b)
        if ea != NULL:
            free(ea)
        if eb != NULL:
            free(eb)
        if em != NULL:
            free(em)


cdef int _extent(Pt *p, Py_ssize_t n, i64 level, i64 *out) noexcept nogil:
    """Fill out = (num_l, den_l, num_r, den_r); 0 if the level misses."""
    cdef Py_ssize_t i
    cdef i64 num, den, cn, cd
    cdef int found = 0, c, ncand
    cdef i64 cands[4]
    for i in range(n):
        if p[i].y == p[(i + 1) % n].y:
            if p[i].y != level:
                continue
            cands[0] = p[i].x
            cands[1] = 1
            cands[2] = p[(i + 1) % n].x
            cands[3] = 1
            ncand = 2
        else:
            if level < min(p[i].y, p[(i + 1) % n].y) or level > max(p[i].y, p[(i + 1) % n].y):
                continue
            den = p[(i + 1) % n].y - p[i].y
            num = p[i].x * den + (level - p[i].y) * (p[(i + 1) % n].x - p[i].x)
            if den < 0:
                num = -num
                den = -den
            cands[0] = num
            cands[1] = den
            ncand = 1
        for c in range(ncand):
            cn = cands[2 * c]
            cd = cands[2 * c + 1]
            if not found or <i128> cn * out[1] < <i128> out[0] * cd:
                out[0] = cn
                out[1] = cd
            if not found or <i128> cn * out[3] > <i128> out[2] * cd:
                out[2] = cn
                out[3] = cd
            found = 1
    return found


def max_chord(xs, ys):
    """Longest horizontal chord: ``(level, (num_l, den_l), (num_r, den_r))``."""
    cdef Py_ssize_t n = len(xs), i
    cdef Pt *p = _load(xs, ys, _CHORD)
    cdef i64 ext[4]
    cdef i64 best_ext[4]
    cdef i64 level, best_level = 0
    cdef i128 num, den, bnum = 0, bden = 1
    cdef int have = 0
    try:
        levels = sorted(set(ys))
        for lv in levels:
            level = lv
            _extent(p, n, level, ext)
            num = <i128> ext[2] * ext[1] - <i128> ext[0] * ext[3]
            den = <i128> ext[3] * ext[1]
            if not have or num * bden > bnum * den:
                bnum = num
                bden = den
                best_level = level
                best_ext[0] = ext[0]
                best_ext[1] = ext[1]
                best_ext[2] = ext[2]
                best_ext[3] = ext[3]
                have = 1
        return best_level, (best_ext[0], best_ext[1]), (best_ext[2], best_ext[3])
    finally:
        free(p)
