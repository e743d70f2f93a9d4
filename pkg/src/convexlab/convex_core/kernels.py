"""Kernel selection.

The compiled module is used when it imported and the inputs are Python
ints inside its overflow-safe range; anything else (Fractions, floats,
huge lattices) goes to the pure-Python implementation, which gives
identical results. Set ``CONVEXLAB_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_c = None
if not os.environ.get("CONVEXLAB_PURE_PYTHON"):
    try:
        from . import _ckernels as _c

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _c = None


def _ints(*seqs):
    for seq in seqs:
        for v in seq:
            if type(v) is not int:
                return False
    return True


def _dispatch(name):
    py = getattr(_pykernels, name)
    if _c is None:
        return py
    cf = getattr(_c, name)

    def call(*args):
        if _ints(*args):
            try:
                return cf(*args)
            except OverflowError:
                pass
        return py(*args)

    call.__name__ = name
    call.__doc__ = py.__doc__
    return call


hull2 = _dispatch("hull2")
area2 = _dispatch("area2")
minkowski2 = _dispatch("minkowski2")
max_chord = _dispatch("max_chord")
level_extent = _pykernels.level_extent


def use_backend(name):
    """Rebind module-level kernels (``"python"`` or ``"compiled"``).

    Benchmarks and cross-check tests use this; library code never does.
    """
    global hull2, area2, minkowski2, max_chord, BACKEND
    if name == "python":
        hull2, area2 = _pykernels.hull2, _pykernels.area2
        minkowski2, max_chord = _pykernels.minkowski2, _pykernels.max_chord
    elif name == "compiled":
        if _c is None:
            raise RuntimeError("compiled kernels are not available")
        hull2, area2 = _dispatch("hull2"), _dispatch("area2")
        minkowski2, max_chord = _dispatch("minkowski2"), _dispatch("max_chord")
    else:
        raise ValueError(name)
    BACKEND = name


def compiled_available():
    return _c is not None
