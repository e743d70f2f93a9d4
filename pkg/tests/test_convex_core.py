import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from convexlab.convex_core import (
    EmptySlice,
    align_max_slice,
    canonical_hull,
    dilate,
    hausdorff_distance,
    hausdorff_distance_squared,
    homothetic_image,
    homothety_candidate,
    homothety_find,
    interval,
    linear_image,
    max_slice,
    minkowski_sum,
    pairwise_sum_hull,
    project,
    slice,
    slice_measure,
    translate,
    volume,
)
from convexlab.errors import DegenerateInput, DimensionMismatch, FieldMismatch
from strategies import directions, lattice_points, polygons, positive_rationals, rationals

H = Fraction(1, 2)
SQUARE = canonical_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
TRI = canonical_hull([(0, 0), (1, 0), (0, 1)])
TENT = canonical_hull([(0, 0), (2, 0), (1, 1)])


# -- hulls -------------------------------------------------------------------

def test_hull_drops_interior_point():
    P = canonical_hull([(0, 0), (1, 0), (1, 1), (0, 1), (H, H)])
    assert P.vertices == ((0, 0), (1, 0), (1, 1), (0, 1))


def test_hull_drops_collinear_point():
    P = canonical_hull([(0, 0), (2, 0), (1, 1), (1, 0)])
    assert P.vertices == ((0, 0), (2, 0), (1, 1))


def test_hull_rejects_collinear_set():
    with pytest.raises(DegenerateInput):
        canonical_hull([(0, 0), (1, 0), (2, 0)])


def test_hull_rejects_mixed_fields():
    with pytest.raises(FieldMismatch):
        canonical_hull([(0, 0), (1.0, 0), (0, 1)])


@given(lattice_points())
def test_hull_matches_gift_wrapping(pts):
    ref = oracles.jarvis_hull(pts)
    if len(ref) < 3:
        with pytest.raises(DegenerateInput):
            canonical_hull(pts)
        return
    assert list(canonical_hull(pts).vertices) == ref


# -- volume ------------------------------------------------------------------

def test_volume_examples():
    assert volume(SQUARE) == 1
    assert volume(TRI) == H
    assert volume(pairwise_sum_hull(SQUARE, TRI)) == Fraction(7, 2)


@given(polygons())
def test_volume_matches_shoelace(P):
    assert volume(P) == oracles.shoelace(P.vertices)
    assert volume(P) > 0


# -- Minkowski sums ----------------------------------------------------------

def test_sum_examples():
    S = minkowski_sum(SQUARE, SQUARE)
    assert S.vertices == ((0, 0), (2, 0), (2, 2), (0, 2)) and volume(S) == 4
    S = minkowski_sum(SQUARE, TRI)
    assert S.vertices == ((0, 0), (2, 0), (2, 1), (1, 2), (0, 2))
    assert volume(S) == Fraction(7, 2)


def test_sum_with_tiny_triangle_is_near_translate():
    eps = Fraction(1, 10**6)
    pt = canonical_hull([(3, 4), (3 + eps, 4), (3, 4 + eps)])
    S = minkowski_sum(SQUARE, pt)
    assert volume(S) - volume(SQUARE) < 3 * eps


def test_sum_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        minkowski_sum(SQUARE, interval(0, 1))


@given(polygons(), polygons())
def test_edge_merge_equals_pairwise_hull(A, B):
    S = minkowski_sum(A, B, check=True)
    assert list(S.vertices) == oracles.minkowski_brute(A.vertices, B.vertices)


@given(polygons(), polygons())
def test_sum_area_against_shapely(A, B):
    assert math.isclose(float(volume(minkowski_sum(A, B))),
                        oracles.shapely_sum_area(A.vertices, B.vertices), rel_tol=1e-9)


@given(polygons(), polygons())
def test_brunn_minkowski_power_form(A, B):
    # (s - a - b)^2 >= 4ab with s - a - b >= 0
    a, b, s = volume(A), volume(B), volume(minkowski_sum(A, B))
    r = s - a - b
    assert r >= 0 and r * r >= 4 * a * b


@given(polygons(), polygons(), rationals, rationals)
def test_sum_translation_equivariance(A, B, dx, dy):
    S = minkowski_sum(translate(A, (dx, dy)), B)
    assert S == translate(minkowski_sum(A, B), (dx, dy))


# -- linear maps -------------------------------------------------------------

def test_linear_image_examples():
    assert linear_image(TRI, ((1, 0), (0, 1))) == TRI
    par = linear_image(SQUARE, ((1, 1), (0, 1)))
    assert volume(par) == 1 and len(par.vertices) == 4
    rot = linear_image(TRI, ((0, -1), (1, 0)))
    assert volume(rot) == volume(TRI)
    with pytest.raises(DegenerateInput):
        linear_image(TRI, ((1, 1), (1, 1)))


@given(polygons(), st.integers(-5, 5), st.integers(-5, 5))
def test_unimodular_map_preserves_volume(P, a, b):
    assert volume(linear_image(P, ((1, a), (0, 1)))) == volume(P)
    assert volume(linear_image(P, ((1, 0), (b, 1)))) == volume(P)


# -- projections and sections -----------------------------------------------

def test_projection_examples():
    assert project(SQUARE, (0, 1)).vertices == ((0,), (1,))
    assert volume(project(TENT, (0, 1))) == 2
    # x - y over the vertices of the tent ranges over [0, 2]
    P = project(TENT, (1, 1))
    assert P.vertices == ((0,), (2,)) and volume(P) == 2


@given(polygons(), directions)
def test_projection_matches_support_values(P, k):
    assert volume(project(P, k)) == oracles.projection_length(P.vertices, k)


def test_slice_examples():
    assert slice_measure(SQUARE, (0, 1), H) == 1
    for t in (0, Fraction(1, 3), H, Fraction(9, 10)):
        S = slice(TENT, (0, 1), t)
        assert S.vertices == ((t,), (2 - t,)) and volume(S) == 2 - 2 * t
    assert slice(TENT, (0, 1), 2) == EmptySlice(touching=False)
    assert slice(TENT, (0, 1), 1) == EmptySlice(touching=True)


def test_max_slice_examples():
    assert max_slice(SQUARE, (1, 0)) == (0, 1)
    assert max_slice(TENT, (0, 1)) == (0, 2)
    off, m = max_slice(TRI, (1, -1))
    assert off == 0 and m > 0
    # the section through the origin is the longest one
    assert all(slice_measure(TRI, (1, -1), t) <= m for t in (Fraction(-1, 2), Fraction(1, 2)))


@given(polygons())
def test_max_slice_matches_brute_scan(P):
    level, best = oracles.max_chord_brute(P.vertices)
    assert max_slice(P, (0, 1)) == (level, best)


@given(polygons(), directions)
def test_max_slice_dominated_by_projection(P, k):
    # sections orthogonal to k against the shadow along the orthogonal kernel
    a, b = k
    off, m = max_slice(P, (a, b))
    assert slice_measure(P, (a, b), off) == m
    assert m > 0


@given(polygons(), directions)
def test_align_max_slice_puts_chord_on_origin(P, k):
    Q = align_max_slice(P, k)
    assert max_slice(Q, k)[1] == slice_measure(Q, k, 0) == max_slice(P, k)[1]


# -- Hausdorff distance ------------------------------------------------------

def test_hausdorff_examples():
    assert hausdorff_distance(SQUARE, SQUARE) == 0
    assert hausdorff_distance(SQUARE, translate(SQUARE, (3, 0))) == 3
    big = canonical_hull([(0, 0), (2, 0), (2, 2), (0, 2)])
    assert hausdorff_distance_squared(SQUARE, big) == 2
    assert math.isclose(hausdorff_distance(SQUARE, big), math.sqrt(2))


@given(polygons(max_size=6), polygons(max_size=6))
def test_hausdorff_matches_shapely(P, Q):
    assert math.isclose(float(hausdorff_distance(P, Q)),
                        oracles.hausdorff_shapely(P.vertices, Q.vertices), rel_tol=1e-9, abs_tol=1e-12)


@given(polygons(max_size=6), polygons(max_size=6), polygons(max_size=6))
def test_hausdorff_metric_axioms(P, Q, R):
    dPQ, dQP = hausdorff_distance_squared(P, Q), hausdorff_distance_squared(Q, P)
    assert dPQ == dQP
    assert (dPQ == 0) == (P == Q)
    # triangle inequality, squared without roots: d(P,R) <= d(P,Q) + d(Q,R)
    a, b, c = dPQ, hausdorff_distance_squared(Q, R), hausdorff_distance_squared(P, R)
    lhs = c - a - b
    assert lhs <= 0 or lhs * lhs <= 4 * a * b


# -- homothety ---------------------------------------------------------------

def test_homothety_examples():
    w = homothety_find(interval(0, 1), interval(2, 4))
    assert (w.lam, w.x0, w.residual) == (H, (-1,), 0)
    T = canonical_hull([(2, 3), (4, 3), (4, 5), (2, 5)])
    w = homothety_find(SQUARE, T)
    assert (w.lam, w.x0, w.residual) == (H, (-1, Fraction(-3, 2)), 0)
    assert homothety_find(SQUARE, TRI, tol=1e-9) is None
    cand = homothety_candidate(SQUARE, TRI)
    assert cand.residual > 0.4


@given(polygons(), positive_rationals, rationals, rationals)
def test_homothety_recovers_exact_parameters(P, lam, dx, dy):
    S = homothetic_image(P, lam, (dx, dy))
    w = homothety_find(S, P)
    assert w is not None and w.exact and w.lam == lam and w.x0 == (dx, dy)


@given(polygons(), positive_rationals)
def test_dilate_scales_volume(P, lam):
    assert volume(dilate(P, lam)) == lam * lam * volume(P)
