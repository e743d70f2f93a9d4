import json
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from convexlab.bounds import PROJECTION, SLICE, full_report
from convexlab.certifier import (
    EqualityVerdict,
    check_graph_homothety,
    decide_equality_projection,
    decide_equality_slice_2d,
    slice_monotonicity_check,
    verify_decomposition,
)
from convexlab.convex_core import (
    align_max_slice,
    as_float,
    canonical_hull,
    dilate,
    homothetic_image,
    minkowski_sum,
    translate,
    volume,
)
from convexlab.errors import DimensionMismatch, DomainMismatch, FieldMismatch, NotAligned, PreconditionViolated
from convexlab.graph_body import CONCAVE, PLFunction, from_polytope, stretch, to_polytope
from convexlab.lab.generators import gen_equality_pair
from strategies import directions, polygons

H = Fraction(1, 2)
SQUARE = canonical_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
RECT = canonical_hull([(0, 0), (1, 0), (1, 2), (0, 2)])
TRI = canonical_hull([(0, 0), (1, 0), (0, 1)])
TENT = canonical_hull([(0, 0), (2, 0), (1, 1)])
TENT_F = PLFunction(((0, 0), (1, 1), (2, 0)), CONCAVE)


def house():
    return to_polytope(stretch(from_polytope(dilate(TENT, H)), Fraction(1, 4)))


def test_projection_examples():
    v = decide_equality_projection(RECT, SQUARE, (0, 1))
    d = v.decomposition
    assert v.equal and v.gap == 0
    assert (d.alpha, d.beta, d.witness.lam) == (1, 0, 1)
    assert volume(to_polytope(d.A_core)) == volume(to_polytope(d.B_core)) == 1

    v = decide_equality_projection(SQUARE, TRI, (0, 1))
    assert not v.equal and v.counterevidence["gap"] == H

    v = decide_equality_projection(TENT, house(), (0, 1))
    d = v.decomposition
    assert v.equal and v.gap == 0
    assert (d.witness.lam, d.alpha, d.beta) == (H, 0, Fraction(1, 4))
    assert verify_decomposition(TENT, house(), d)
    # the sum attains the bound exactly
    S = minkowski_sum(TENT, house())
    rep = full_report(TENT, house(), (0, 1))
    assert volume(S) == rep.bonnesen_bound


def test_check_graph_homothety_examples():
    assert check_graph_homothety(TENT_F, TENT_F, 1, (0,)) == 0
    big = PLFunction(((0, 0), (2, 2), (4, 0)), CONCAVE)
    assert check_graph_homothety(big, TENT_F, 2, (0,)) == 0
    lifted = PLFunction(((0, 3), (1, 4), (2, 3)), CONCAVE)
    assert check_graph_homothety(lifted, TENT_F, 1, (0,)) == 3
    other = PLFunction(((0, 0), (H, 1), (2, 0)), CONCAVE)
    assert check_graph_homothety(other, TENT_F, 1, (0,)) is None
    with pytest.raises(DomainMismatch):
        check_graph_homothety(TENT_F, TENT_F, 2, (0,))


def test_input_checks():
    with pytest.raises(FieldMismatch):
        decide_equality_projection(SQUARE, as_float(SQUARE), (0, 1))
    with pytest.raises(ValueError):
        decide_equality_projection(SQUARE, SQUARE, (0, 0))
    cube = canonical_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    with pytest.raises(DimensionMismatch):
        decide_equality_projection(SQUARE, cube, (0, 1))


def test_verdict_invariants_and_json():
    with pytest.raises(ValueError):
        EqualityVerdict(True)
    with pytest.raises(ValueError):
        EqualityVerdict(False)
    v = decide_equality_projection(TENT, house(), (0, 1))
    data = json.loads(json.dumps(v.to_json()))
    assert set(data) == {"equal", "lambda", "x0", "alpha", "beta", "gap", "shear"}
    assert data["lambda"] == "1/2" and data["beta"] == "1/4" and data["gap"] == "0/1"
    data = decide_equality_projection(SQUARE, TRI, (0, 1)).to_json()
    assert data["equal"] is False and data["gap"] == "1/2" and data["lambda"] is None


@given(st.integers(0, 10**6))
def test_soundness_constructed_pairs(seed):
    rng = random.Random(seed)
    A, B, truth = gen_equality_pair(rng, vertices=(3, 7))
    k = truth.shear.kernel_dir
    rep = full_report(A, B, k)
    assert rep.gap_bonnesen == 0
    v = decide_equality_projection(A, B, k, report=rep)
    assert v.equal
    assert verify_decomposition(A, B, v.decomposition)
    d = v.decomposition
    assert d.witness.lam == truth.witness.lam
    assert d.witness.residual == 0


@given(polygons(), polygons(), directions)
def test_verdict_matches_gap(A, B, k):
    v = decide_equality_projection(A, B, k)
    assert v.equal == (v.gap == 0)
    assert v.gap == full_report(A, B, k).gap_bonnesen
    if v.equal:
        assert verify_decomposition(A, B, v.decomposition)


@given(polygons(), directions, st.fractions(Fraction(1, 8), 8).filter(lambda x: x > 0))
def test_homothetic_pairs_are_equal(P, k, lam):
    Q = homothetic_image(P, lam, (1, -2))
    v = decide_equality_projection(P, Q, k)
    assert v.equal and v.decomposition.witness.lam == lam


def test_verify_rejects_wrong_witness():
    v = decide_equality_projection(TENT, house(), (0, 1))
    assert not verify_decomposition(TENT, SQUARE, v.decomposition)


def test_float_mode_two_dimensional():
    A, B = as_float(TENT), as_float(house())
    v = decide_equality_projection(A, B, (0, 1))
    assert v.equal and v.mode == "float"
    assert abs(v.decomposition.witness.lam - 0.5) < 1e-9
    assert verify_decomposition(A, B, v.decomposition, tol=1e-9)
    assert not decide_equality_projection(as_float(SQUARE), as_float(TRI), (0, 1)).equal


def test_three_dimensional_cubes():
    cube = canonical_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)],
                          field="float")
    tall = canonical_hull([(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 5)],
                          field="float")
    v = decide_equality_projection(cube, tall, (0, 0, 1))
    assert v.equal and abs(v.decomposition.witness.lam - 2) < 1e-9
    simplex = canonical_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], field="float")
    v = decide_equality_projection(cube, simplex, (0, 0, 1))
    assert not v.equal and v.gap > 1e-6


# -- slice form -------------------------------------------------------------

def rational_16gon():
    quarter = [(1, 0), (Fraction(12, 13), Fraction(5, 13)), (Fraction(4, 5), Fraction(3, 5)),
               (Fraction(5, 13), Fraction(12, 13))]
    pts = []
    for x, y in quarter:
        pts += [(x, y), (-y, x), (-x, -y), (y, -x)]
    return dilate(canonical_hull(pts), H)


def test_slice_examples():
    v = decide_equality_slice_2d(SQUARE, SQUARE, (0, 1))
    assert v.equal and v.decomposition.witness.lam == 1
    assert v.decomposition.shear.matrix == ((1, 0), (0, 1))

    v = decide_equality_slice_2d(TENT, dilate(TENT, H), (0, 1))
    assert v.equal and v.decomposition.witness.lam == H

    G = rational_16gon()
    assert len(G.vertices) == 16
    rep = full_report(SQUARE, G, (0, 1), SLICE)
    assert rep.N == 1
    v = decide_equality_slice_2d(SQUARE, G, (0, 1))
    assert not v.equal and v.gap > 0


def test_slice_not_aligned():
    with pytest.raises(NotAligned):
        decide_equality_slice_2d(translate(TENT, (0, Fraction(-1, 2))), TENT, (0, 1))


def test_slice_agrees_with_projection():
    v = decide_equality_slice_2d(TENT, house(), (0, 1))
    assert v.equal
    w = decide_equality_projection(TENT, house(), v.decomposition.shear.kernel_dir)
    assert w.equal and w.decomposition.witness.lam == v.decomposition.witness.lam


@given(polygons(), polygons(), st.sampled_from([(0, 1), (1, 0), (1, 2), (-1, 3)]))
@settings(max_examples=40)
def test_slice_verdict_matches_gap(A, B, n):
    A, B = align_max_slice(A, n), align_max_slice(B, n)
    v = decide_equality_slice_2d(A, B, n)
    assert v.equal == (full_report(A, B, n, SLICE).gap_bonnesen == 0)


def test_monotonicity_examples():
    assert slice_monotonicity_check(1, 1, 1, 1, 1)
    assert slice_monotonicity_check(1, 1, 1, 1, 2)
    with pytest.raises(PreconditionViolated):
        slice_monotonicity_check(1, 4, 1, 1, 2)
    with pytest.raises(PreconditionViolated):
        slice_monotonicity_check(1, 1, 1, 2, 1)
    with pytest.raises(PreconditionViolated):
        slice_monotonicity_check(0, 1, 1, 1, 1)


@given(st.fractions(Fraction(1, 10), 10), st.fractions(Fraction(1, 10), 10),
       st.fractions(Fraction(1, 10), 10), st.fractions(Fraction(1, 10), 10),
       st.fractions(0, 5))
def test_monotonicity_property(volA, volB, M, N, extra):
    assume(volB * M * M <= volA * N * N)
    assert slice_monotonicity_check(volA, volB, M, N, N + extra)
