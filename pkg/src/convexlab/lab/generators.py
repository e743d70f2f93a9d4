"""Seeded random bodies and constructed equality pairs."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from ..certifier import StretchDecomposition
from ..convex_core import (
    HomothetyWitness,
    Polytope,
    as_float,
    canonical_hull,
    homothetic_image,
    linear_image,
    polygon_from_lattice,
)
from ..convex_core import _space3d, kernels
from ..errors import DegenerateInput
from ..graph_body import from_polytope, shear_normalize, stretch, to_polytope

MAX_RETRIES = 100


def trial_rng(seed, trial) -> random.Random:
    """Independent stream per trial: outputs never depend on run order."""
    return random.Random(f"{seed}:{trial}")


def gen_convex_polygon(rng: random.Random, k: int, denom: int = 10_000) -> Polytope:
    """Hull of ``k`` random points of the grid ``(1/q) Z^2`` inside [-1, 1]^2.

    ``q`` is drawn from ``1..denom``, so the polygon has at most ``k``
    vertices, all with the common denominator ``q``.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    for _ in range(MAX_RETRIES):
        q = rng.randint(1, denom)
        xs = [rng.randint(-q, q) for _ in range(k)]
        ys = [rng.randint(-q, q) for _ in range(k)]
        hx, hy = kernels.hull2(xs, ys)
        if len(hx) >= 3:
            return polygon_from_lattice(hx, hy, q)
    raise DegenerateInput(f"no nondegenerate polygon after {MAX_RETRIES} draws")


def gen_convex_polytope3(rng: random.Random, k: int) -> Polytope:
    """Hull of ``k >= 4`` random points in [-1, 1]^3 (float)."""
    if k < 4:
        raise ValueError("need k >= 4")
    for _ in range(MAX_RETRIES):
        pts = [tuple(rng.uniform(-1, 1) for _ in range(3)) for _ in range(k)]
        try:
            return canonical_hull(pts)
        except DegenerateInput:
            continue
    raise DegenerateInput(f"no nondegenerate polytope after {MAX_RETRIES} draws")


def random_direction(rng: random.Random, dim: int = 2):
    """Small primitive-ish integer kernel direction; vertical one time in four."""
    if rng.random() < 0.25:
        return (0,) * (dim - 1) + (1,)
    while True:
        k = tuple(rng.randint(-4, 4) for _ in range(dim))
        if any(k):
            return k


def _rand_fraction(rng, lo, hi, den=12):
    return Fraction(rng.randint(lo * den, hi * den), den)


def stretch_float(P: Polytope, h, kernel_dir):
    """Raise the upper boundary of a float body by ``h`` along the kernel."""
    frame = shear_normalize(kernel_dir)
    Q = linear_image(P, frame.matrix)
    arr = Q.array()
    fib = _space3d.vertex_fibres(arr)
    pts = []
    for p, (lo, hi) in zip(arr, fib):
        if abs(p[-1] - hi) <= 1e-9 * max(1.0, abs(hi)):
            q = p.copy()
            q[-1] += h
            pts.append(tuple(q))
        if abs(p[-1] - lo) <= 1e-9 * max(1.0, abs(lo)):
            pts.append(tuple(p))
    return linear_image(canonical_hull(pts, field="float"), frame.inverse().matrix)


def gen_equality_pair(rng: random.Random, dim: int = 2, denom: int = 60, vertices=(3, 8),
                      lam=None, alpha=None, beta=None, core=None, kernel=None, x0=None):
    """A pair attaining equality: ``A`` stretches ``P``, ``B`` stretches ``lam P + x0``.

    Returns ``(A, B, truth)`` where ``truth`` is the StretchDecomposition
    used for the construction; its ``shear`` records the kernel. Any of the
    ingredients may be fixed by keyword.
    """
    if dim == 2:
        P = core if core is not None else gen_convex_polygon(rng, rng.randint(*vertices), denom)
    else:
        P = core if core is not None else gen_convex_polytope3(rng, max(4, rng.randint(*vertices)))
    k = kernel if kernel is not None else random_direction(rng, dim)
    if lam is None:
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    if x0 is None:
        x0 = tuple(_rand_fraction(rng, -3, 3) for _ in range(dim))
    if alpha is None:
        alpha = 0 if rng.random() < 0.3 else _rand_fraction(rng, 0, 2)
    if beta is None:
        beta = 0 if rng.random() < 0.3 else _rand_fraction(rng, 0, 2)
    Q = homothetic_image(P, lam, x0)
    if dim == 2 and P.field == "rational":
        GP, GQ = from_polytope(P, k), from_polytope(Q, k)
        A = to_polytope(stretch(GP, alpha))
        B = to_polytope(stretch(GQ, beta))
        truth = StretchDecomposition(GP, alpha, GQ, beta, HomothetyWitness(lam, tuple(x0), 0),
                                     shear_normalize(k))
        return A, B, truth
    P = as_float(P)
    Q = homothetic_image(P, float(lam), tuple(float(c) for c in x0))
    A = stretch_float(P, float(alpha), k)
    B = stretch_float(Q, float(beta), k)
    truth = StretchDecomposition(P, float(alpha), Q, float(beta),
                                 HomothetyWitness(float(lam), tuple(float(c) for c in x0), 0.0),
                                 shear_normalize(k))
    return A, B, truth


def regular_polygon(k: int, radius: float = 1.0) -> Polytope:
    pts = [(radius * math.cos(2 * math.pi * i / k), radius * math.sin(2 * math.pi * i / k))
           for i in range(k)]
    return canonical_hull(pts, field="float")
