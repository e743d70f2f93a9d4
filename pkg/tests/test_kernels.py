import os
import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convexlab.convex_core import _pykernels, kernels

needs_compiled = pytest.mark.skipif(not kernels.compiled_available(), reason="extension not built")

coords = st.lists(st.tuples(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6)),
                  min_size=1, max_size=40)


def _split(pts):
    return [p[0] for p in pts], [p[1] for p in pts]


@needs_compiled
@given(coords, coords)
def test_compiled_matches_python(p, q):
    from convexlab.convex_core import _ckernels as C

    xs, ys = _split(p)
    h = _pykernels.hull2(xs, ys)
    assert C.hull2(xs, ys) == h
    if len(h[0]) < 3:
        return
    assert C.area2(*h) == _pykernels.area2(*h)
    assert C.max_chord(*h) == _pykernels.max_chord(*h)
    h2 = _pykernels.hull2(*_split(q))
    if len(h2[0]) >= 3:
        assert C.minkowski2(*h, *h2) == _pykernels.minkowski2(*h, *h2)


@needs_compiled
def test_compiled_rejects_out_of_range():
    from convexlab.convex_core import _ckernels as C

    with pytest.raises(OverflowError):
        C.hull2([0, 1 << 28, 0], [0, 0, 1])
    with pytest.raises(OverflowError):
        C.max_chord([0, 1 << 20, 0], [0, 0, 1])


def test_dispatch_falls_back_for_large_and_fractional_input():
    big = [0, 1 << 40, 0]
    assert kernels.hull2(big, [0, 0, 1 << 40]) == _pykernels.hull2(big, [0, 0, 1 << 40])
    from fractions import Fraction

    xs = [Fraction(0), Fraction(1, 3), Fraction(0)]
    ys = [Fraction(0), Fraction(0), Fraction(1, 7)]
    assert kernels.area2(xs, ys) == Fraction(1, 21)


def test_use_backend_round_trip():
    rng = random.Random(3)
    xs = [rng.randint(-50, 50) for _ in range(30)]
    ys = [rng.randint(-50, 50) for _ in range(30)]
    try:
        kernels.use_backend("python")
        ref = kernels.hull2(xs, ys)
        if kernels.compiled_available():
            kernels.use_backend("compiled")
            assert kernels.hull2(xs, ys) == ref
    finally:
        kernels.use_backend("compiled" if kernels.compiled_available() else "python")
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_environment_forces_python_backend():
    env = dict(os.environ, CONVEXLAB_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from convexlab.convex_core import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
