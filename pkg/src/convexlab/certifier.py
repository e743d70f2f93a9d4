"""Deciding equality in Bonnesen's bounds.

Equality in the projection form holds exactly when ``A`` and ``B`` are
stretchings (along the projection kernel) of two homothetic bodies. The
decision follows the structure of that statement:

1. the projections of A and B must be homothetic (automatic in the plane);
2. both bodies are compressed maximally along the kernel;
3. each core is stretched until floor and ceiling separate and then cut
   into an upper and a lower piece;
4. the upper graphs and the lower graphs must be homothetic under one
   common ratio and translation.

Every verdict is cross-checked against the numeric gap of ``full_report``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import FLOAT_TOL, PROJECTION, SLICE, full_report
from .convex_core import (
    Polytope,
    canonical_hull,
    homothetic_image,
    homothety_candidate,
    linear_image,
    max_slice,
    project,
    slice_measure,
    volume,
)
from .convex_core import _space3d
from .errors import DegenerateInput, DimensionMismatch, DomainMismatch, FieldMismatch, NotAligned, PreconditionViolated
from .graph_body import (
    GraphBody,
    PLFunction,
    ShearMap,
    _div,
    compress_to_floor,
    epigraph_split,
    find_shear,
    from_polytope,
    shear_normalize,
    stretch,
    to_polytope,
)
from .scalars import RATIONAL, format_fraction, is_exact


@dataclass(frozen=True)
class StretchDecomposition:
    """``A = stretch(A_core, alpha)``, ``B = stretch(B_core, beta)`` and
    ``B_core = lam * A_core + x0`` (``witness``).

    Cores are GraphBody values in exact planar mode and Polytopes (in the
    original coordinates) in float mode.
    """

    A_core: object
    alpha: object
    B_core: object
    beta: object
    witness: object
    shear: ShearMap | None = None


@dataclass(frozen=True)
class EqualityVerdict:
    equal: bool
    decomposition: StretchDecomposition | None = None
    counterevidence: dict | None = None
    gap: object = None
    mode: str = "exact"

    def __post_init__(self):
        if self.equal != (self.decomposition is not None):
            raise ValueError("an equal verdict carries a decomposition and nothing else")
        if (not self.equal) != (self.counterevidence is not None):
            raise ValueError("an unequal verdict carries counterevidence")

    def to_json(self):
        def s(v):
            if v is None:
                return None
            if isinstance(v, (int, Fraction)):
                return format_fraction(v)
            return float(v)

        d = self.decomposition
        out = {"equal": self.equal, "lambda": None, "x0": None, "alpha": None,
               "beta": None, "gap": s(self.gap), "shear": None}
        if d is not None:
            out.update(
                {"lambda": s(d.witness.lam), "x0": [s(c) for c in d.witness.x0],
                 "alpha": s(d.alpha), "beta": s(d.beta)}
            )
            if d.shear is not None:
                out["shear"] = [[s(c) for c in row] for row in d.shear.matrix]
        return out


# ---------------------------------------------------------------------------
# graph homothety


def check_graph_homothety(f: PLFunction, g: PLFunction, lam, x0, tol=0):
    """Constant ``C`` with ``f(x) = lam * g((x - x0) / lam) + C``, else None.

    Checking the identity at the merged breakpoints suffices for PL
    functions. The domain of ``f`` must be ``lam * dom(g) + x0``; ``x0``
    may be a scalar or a one-element sequence.
    """
    if isinstance(x0, (tuple, list)):
        (x0,) = x0
    if not lam > 0:
        raise ValueError("ratio must be positive")
    lo, hi = lam * g.lo + x0, lam * g.hi + x0
    if abs(f.lo - lo) > tol or abs(f.hi - hi) > tol:
        raise DomainMismatch(f"dom f = [{f.lo}, {f.hi}] but lam * dom g + x0 = [{lo}, {hi}]")
    inner = (lam * x + x0 for x in g.xs[1:-1])
    xs = sorted(set(f.xs) | {x for x in inner if f.lo < x < f.hi})
    C = None
    for x in xs:
        y = min(max(_div(x - x0, lam), g.lo), g.hi)
        c = f(x) - lam * g(y)
        if C is None:
            C = c
        elif abs(c - C) > tol:
            return None
    expected = _div(f.integral(), f.hi - f.lo) - _div(lam * g.integral(), g.hi - g.lo)
    if tol == 0:
        assert expected == C, (C, expected)
    else:
        assert math.isclose(expected, C, rel_tol=1e-9, abs_tol=10 * tol), (C, expected)
    return C


# ---------------------------------------------------------------------------
# projection form


def _split_level(G: GraphBody):
    """(margin, level, upper, lower) of a core stretched until it separates."""
    h = max(0, G.floor.max() - G.ceiling.min()) + 1
    S = stretch(G, h)
    upper, lower = epigraph_split(S)
    t = lower.ceiling(S.floor.lo) + S.floor(S.floor.lo)
    return h, t, upper, lower


def _decide_exact_2d(A, B, kernel_dir):
    GA, GB = from_polytope(A, kernel_dir), from_polytope(B, kernel_dir)
    coreA, alpha = compress_to_floor(GA)
    coreB, beta = compress_to_floor(GB)
    lam = _div(GB.floor.hi - GB.floor.lo, GA.floor.hi - GA.floor.lo)
    x0 = GB.floor.lo - lam * GA.floor.lo

    hA, tA, upA, lowA = _split_level(coreA)
    hB, tB, upB, lowB = _split_level(coreB)
    c_up = check_graph_homothety(upB.ceiling, upA.ceiling, lam, x0)
    if c_up is None:
        return None, {"mismatch": "ceiling"}
    c_low = check_graph_homothety(lowB.ceiling, lowA.ceiling, lam, x0)
    if c_low is None:
        return None, {"mismatch": "floor"}
    # compressed cores have minimal fibre 0, so the two offsets agree
    assert c_up + c_low == hB - lam * hA
    y0 = tB - lam * tA - c_low

    # undo the common part of the compression: one of alpha, beta becomes 0
    t = min(alpha, _div(beta, lam))
    coreA, coreB = stretch(coreA, t), stretch(coreB, lam * t)
    alpha, beta = alpha - t, beta - lam * t

    frame = GA.frame
    shift = (x0, y0)
    if frame is not None:
        shift = frame.inverse().apply_point(shift)
    witness = _witness(lam, shift, 0)
    return StretchDecomposition(coreA, alpha, coreB, beta, witness, frame), None


def _witness(lam, x0, residual):
    from .convex_core import HomothetyWitness

    return HomothetyWitness(lam, tuple(x0), residual)


def _domain(Q: Polytope):
    arr = Q.array()
    if Q.dim == 2:
        return float(arr[:, 0].min()), float(arr[:, 0].max())
    return canonical_hull([tuple(p[:2]) for p in arr], field="float")


def _core(Q: Polytope, fib, cut, eps):
    pts = []
    for p, (lo, hi) in zip(Q.array(), fib):
        if abs(p[-1] - lo) <= eps:
            pts.append(tuple(p))
        if abs(p[-1] - hi) <= eps:
            q = p.copy()
            q[-1] -= cut
            pts.append(tuple(q))
    return canonical_hull(pts, field="float")


def _decide_float(A, B, kernel_dir, tol):
    frame = shear_normalize(kernel_dir)
    QA, QB = linear_image(A, frame.matrix), linear_image(B, frame.matrix)
    scale = max(1.0, float(np.abs(QA.array()).max()), float(np.abs(QB.array()).max()))
    eps = tol * scale
    DA, DB = _domain(QA), _domain(QB)
    if QA.dim == 2:
        lam = (DB[1] - DB[0]) / (DA[1] - DA[0])
    else:
        hom = homothety_candidate(DB, DA)
        if hom.residual > eps:
            return None, {"residual": float(hom.residual), "mismatch": "projection"}
        lam = hom.lam
    fibA, fibB = _space3d.vertex_fibres(QA.array()), _space3d.vertex_fibres(QB.array())
    alpha = min(hi - lo for lo, hi in fibA)
    beta = min(hi - lo for lo, hi in fibB)
    t = min(alpha, beta / lam)
    try:
        coreA = _core(QA, fibA, alpha - t, eps)
        coreB = _core(QB, fibB, beta - lam * t, eps)
    except DegenerateInput:
        # a flat core needs t = 0, so the other core is the full body
        return None, {"residual": None, "mismatch": "flat core"}
    hom = homothety_candidate(coreB, coreA)
    if hom.residual > eps or abs(hom.lam - lam) > eps:
        return None, {"residual": float(hom.residual), "mismatch": "core"}
    inv = frame.inverse()
    x0 = inv.apply_point(hom.x0)
    witness = _witness(hom.lam, x0, float(hom.residual))
    back = inv.matrix
    dec = StretchDecomposition(
        linear_image(coreA, back), alpha - t, linear_image(coreB, back), beta - lam * t,
        witness, None if frame.is_identity else frame,
    )
    return dec, None


def _check_inputs(A: Polytope, B: Polytope, kernel_dir):
    if A.dim != B.dim:
        raise DimensionMismatch(f"dimensions {A.dim} and {B.dim} differ")
    if A.field != B.field:
        raise FieldMismatch(f"fields {A.field} and {B.field} differ")
    if A.dim not in (2, 3):
        raise DimensionMismatch("certification is available in dimensions 2 and 3")
    if len(kernel_dir) != A.dim or all(c == 0 for c in kernel_dir):
        raise ValueError("kernel direction must be a nonzero vector of matching length")


def decide_equality_projection(A: Polytope, B: Polytope, kernel_dir, tol=FLOAT_TOL,
                               report=None) -> EqualityVerdict:
    """Is ``|A + B|`` equal to the projection-form Bonnesen bound?

    Exact for rational planar bodies; rational 3D or float bodies are
    decided in floating point within ``tol`` (not a certificate).
    """
    _check_inputs(A, B, kernel_dir)
    exact = A.dim == 2 and A.field == RATIONAL and all(is_exact(c) for c in kernel_dir)
    if report is None:
        report = full_report(A, B, kernel_dir, PROJECTION, tol)
    if exact:
        dec, why = _decide_exact_2d(A, B, kernel_dir)
        assert (dec is not None) == (report.gap_bonnesen == 0), (
            f"verdict {dec is not None} disagrees with gap {report.gap_bonnesen}"
        )
    else:
        dec, why = _decide_float(A, B, kernel_dir, tol)
        assert (dec is not None) == report.equality_bonnesen, (
            f"verdict {dec is not None} disagrees with gap {report.gap_bonnesen}"
        )
    mode = "exact" if exact else "float"
    if dec is not None:
        return EqualityVerdict(True, decomposition=dec, gap=report.gap_bonnesen, mode=mode)
    return EqualityVerdict(
        False, counterevidence={"gap": report.gap_bonnesen, **why},
        gap=report.gap_bonnesen, mode=mode,
    )


def verify_decomposition(A: Polytope, B: Polytope, dec: StretchDecomposition, tol=0) -> bool:
    """Re-check a decomposition without the decision machinery."""
    if isinstance(dec.A_core, GraphBody):
        PA = to_polytope(dec.A_core)
        PB = to_polytope(dec.B_core)
        ok = to_polytope(stretch(dec.A_core, dec.alpha)) == A
        ok = ok and to_polytope(stretch(dec.B_core, dec.beta)) == B
        return ok and homothetic_image(PA, dec.witness.lam, dec.witness.x0) == PB
    from .convex_core import hausdorff_distance

    image = homothetic_image(dec.A_core, dec.witness.lam, dec.witness.x0)
    return float(hausdorff_distance(image, dec.B_core)) <= tol


# ---------------------------------------------------------------------------
# slice form (planar)


def _h(x, y, volA, volB):
    return (x + y) * (_div(volA, x) + _div(volB, y))


def slice_monotonicity_check(volA, volB, M, N, Nprime) -> bool:
    """``h(M, N') >= h(M, N)`` with equality only for ``N' = N``.

    ``h(x, y) = (x + y)(|A|/x + |B|/y)`` increases in ``y`` once
    ``|B|/y**2 <= |A|/x**2``.
    """
    for v in (volA, volB, M, N, Nprime):
        if not v > 0:
            raise PreconditionViolated(f"inputs must be positive, got {v}")
    if Nprime < N:
        raise PreconditionViolated(f"N' = {Nprime} is below N = {N}")
    if volB * M * M > volA * N * N:
        raise PreconditionViolated("ordering |B|/N^2 <= |A|/M^2 fails")
    h0, h1 = _h(M, N, volA, volB), _h(M, Nprime, volA, volB)
    if Nprime == N:
        return h1 == h0
    return h1 > h0


def _to_axis(n):
    """Similarity sending the line ``n . x = 0`` onto the x-axis."""
    return ((n[1], -n[0]), (n[0], n[1]))


def decide_equality_slice_2d(A: Polytope, B: Polytope, H_normal, tol=FLOAT_TOL) -> EqualityVerdict:
    """Is ``|A + B|`` equal to the slice-form Bonnesen bound?

    Both bodies must already have a longest chord parallel to ``H`` on the
    line ``H`` itself. The projection direction is recovered from the body
    with the larger ``|K| / M**2`` and the decision is delegated to the
    projection form.
    """
    if A.dim != 2 or B.dim != 2:
        raise DimensionMismatch("the slice form is decided in the plane only")
    n = tuple(H_normal)
    for name, P in (("A", A), ("B", B)):
        _, best = max_slice(P, n)
        here = slice_measure(P, n, 0)
        if here != best if P.field == RATIONAL else abs(here - best) > tol * max(1.0, best):
            raise NotAligned(f"{name}: chord on H has measure {here}, longest is {best}")
    report = full_report(A, B, n, SLICE, tol)
    M, N = report.M, report.N
    volA, volB = report.volA, report.volB
    first, second = (A, B)
    if volB * M * M > volA * N * N:
        first, second = B, A
        M, N = N, M
        volA, volB = volB, volA

    L = _to_axis(n)
    shear = find_shear(linear_image(first, L))
    w = shear.kernel_dir
    # kernel back in the original coordinates: L^-1 w
    Linv = ShearMap(L, n).inverse().matrix
    kernel = tuple(Linv[i][0] * w[0] + Linv[i][1] * w[1] for i in range(2))
    if A.field == RATIONAL:
        g = math.lcm(*(Fraction(c).denominator for c in kernel))
        kernel = tuple(Fraction(c) * g for c in kernel)
        kernel = tuple(int(c) for c in kernel)

    scale = _div(M, volume(project(first, kernel)))
    Nprime = volume(project(second, kernel)) * scale
    assert slice_monotonicity_check(volA, volB, M, N, Nprime)
    if (Nprime != N) if A.field == RATIONAL else abs(Nprime - N) > tol * max(1.0, N):
        assert not report.equality_bonnesen
        return EqualityVerdict(
            False, counterevidence={"gap": report.gap_bonnesen, "Nprime": Nprime},
            gap=report.gap_bonnesen, mode=report.mode,
        )
    verdict = decide_equality_projection(A, B, kernel, tol)
    assert verdict.equal == report.equality_bonnesen
    if verdict.equal:
        dec = verdict.decomposition
        dec = StretchDecomposition(dec.A_core, dec.alpha, dec.B_core, dec.beta, dec.witness,
                                   shear_normalize(kernel))
        return EqualityVerdict(True, decomposition=dec, gap=report.gap_bonnesen,
                               mode=verdict.mode)
    evidence = {"gap": report.gap_bonnesen, **verdict.counterevidence}
    return EqualityVerdict(False, counterevidence=evidence, gap=report.gap_bonnesen,
                           mode=verdict.mode)
