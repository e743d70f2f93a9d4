"""``lab`` command line.

    lab chain|certify|lemma|convergence --seed N --trials N --dim 2|3 --out DIR
        [--denom-bound N] [--vertices MIN..MAX]
    lab report A.json B.json --kernel 0,1 [--slice]

Exit status: 0 when every invariant held, 1 on a violation, 2 on usage
errors. ``LAB_MODE=float`` switches planar campaigns to doubles.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from ..scalars import parse_scalar
from .campaign import MODES, ExperimentConfig, run_campaign


def _vertex_range(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("expected MIN..MAX, e.g. 3..12") from None
    if not 3 <= lo <= hi:
        raise argparse.ArgumentTypeError("need 3 <= MIN <= MAX")
    return lo, hi


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser():
    parser = argparse.ArgumentParser(prog="lab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for mode in MODES:
        p = sub.add_parser(mode, help=f"run a {mode} campaign")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=_positive, default=100)
        p.add_argument("--dim", type=int, choices=(2, 3), default=2)
        p.add_argument("--out", default="lab_out")
        p.add_argument("--denom-bound", type=_positive, default=10_000)
        p.add_argument("--vertices", type=_vertex_range, default=(3, 12))
    rep = sub.add_parser("report", help="bounds and verdict for two bodies in JSON files")
    rep.add_argument("body_a")
    rep.add_argument("body_b")
    rep.add_argument("--kernel", default="0,1", help="comma separated direction")
    rep.add_argument("--slice", action="store_true", help="use maximal sections")
    return parser


def _report(args):
    from ..bounds import PROJECTION, SLICE, full_report
    from ..certifier import decide_equality_projection, decide_equality_slice_2d
    from ..io import body_from_json, read_json

    A = body_from_json(read_json(args.body_a))
    B = body_from_json(read_json(args.body_b))
    field = A.field
    kernel = tuple(parse_scalar(c, field) for c in args.kernel.split(","))
    rep = full_report(A, B, kernel, SLICE if args.slice else PROJECTION)
    out = {"report": rep.to_json()}
    if A.dim in (2, 3):
        if args.slice:
            verdict = decide_equality_slice_2d(A, B, kernel)
        else:
            verdict = decide_equality_projection(A, B, kernel, report=rep)
        out["verdict"] = verdict.to_json()
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if rep.chain_ok else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "report":
        try:
            return _report(args)
        except (OSError, ValueError, KeyError) as exc:
            print(f"lab: error: {exc}", file=sys.stderr)
            return 2
    try:
        cfg = ExperimentConfig(
            mode=args.command, seed=args.seed, trials=args.trials, dim=args.dim,
            vertex_range=args.vertices, denom_bound=args.denom_bound, output_dir=args.out,
        )
    except ValueError as exc:
        print(f"lab: error: {exc}", file=sys.stderr)
        return 2
    summary = run_campaign(cfg)
    print(json.dumps(summary, sort_keys=True))
    return 0 if summary["violations"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
