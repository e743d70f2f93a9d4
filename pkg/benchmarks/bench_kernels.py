"""Compiled vs pure-Python planar kernels.

    python benchmarks/bench_kernels.py --pairs 2000 --vertices 64

Prints one line per kernel with the time of each backend and the speedup,
then the throughput of full bound reports under both backends.
"""
import argparse
import random
import time

from convexlab.bounds import full_report
from convexlab.convex_core import _pykernels, kernels
from convexlab.lab.generators import gen_convex_polygon


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=2000)
    ap.add_argument("--vertices", type=int, default=32, help="points drawn per polygon")
    ap.add_argument("--denom", type=int, default=1000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if not kernels.compiled_available():
        print("compiled kernels not built; only the Python backend is available")
        return 1
    from convexlab.convex_core import _ckernels

    rng = random.Random(args.seed)
    polys = [gen_convex_polygon(rng, args.vertices, args.denom) for _ in range(2 * args.pairs)]
    raw = [([rng.randint(-args.denom, args.denom) for _ in range(args.vertices)],
            [rng.randint(-args.denom, args.denom) for _ in range(args.vertices)])
           for _ in range(args.pairs)]
    lat = [P.lattice()[:2] for P in polys]
    pairs = list(zip(lat[::2], lat[1::2]))

    cases = {
        "hull2": lambda m: [m.hull2(xs, ys) for xs, ys in raw],
        "area2": lambda m: [m.area2(xs, ys) for xs, ys in lat],
        "minkowski2": lambda m: [m.minkowski2(a[0], a[1], b[0], b[1]) for a, b in pairs],
        "max_chord": lambda m: [m.max_chord(xs, ys) for xs, ys in lat],
    }
    print(f"{'kernel':<12}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for name, run in cases.items():
        assert run(_pykernels) == run(_ckernels), f"{name}: backends disagree"
        tp = _time(lambda: run(_pykernels), args.repeat)
        tc = _time(lambda: run(_ckernels), args.repeat)
        print(f"{name:<12}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")

    bodies = list(zip(polys[::2], polys[1::2]))
    rates = {}
    for backend in ("python", "compiled"):
        kernels.use_backend(backend)
        t = _time(lambda: [full_report(A, B, (1, 2)) for A, B in bodies], 1)
        rates[backend] = len(bodies) / t
    kernels.use_backend("compiled")
    print(f"full_report pairs/s: python {rates['python']:.0f}, compiled {rates['compiled']:.0f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
