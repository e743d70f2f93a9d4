"""JSON and CSV serialization for bodies, graph bodies, reports and verdicts.

Rationals travel as ``"p/q"`` strings so files round-trip exactly; floats
are written as JSON numbers.
"""
from __future__ import annotations

import csv
import json
from fractions import Fraction

from .bounds import BoundReport
from .convex_core import Polytope, canonical_hull, interval
from .graph_body import CONCAVE, CONVEX, GraphBody, PLFunction, ShearMap
from .scalars import FLOAT, RATIONAL, as_fraction, format_fraction, is_exact


def _enc(v):
    return format_fraction(v) if is_exact(v) else float(v)


def _dec(v, field):
    if field == RATIONAL:
        return as_fraction(v)
    return float(Fraction(v)) if isinstance(v, str) else float(v)


def body_to_json(P: Polytope) -> dict:
    return {"dim": P.dim, "field": P.field, "vertices": [[_enc(c) for c in v] for v in P.vertices]}


def body_from_json(data) -> Polytope:
    field = data.get("field", RATIONAL)
    if field not in (RATIONAL, FLOAT):
        raise ValueError(f"unknown field {field!r}")
    pts = [tuple(_dec(c, field) for c in v) for v in data["vertices"]]
    if data["dim"] == 1:
        (lo,), (hi,) = min(pts), max(pts)
        return interval(lo, hi, field)
    if any(len(p) != data["dim"] for p in pts):
        raise ValueError("vertex length does not match dim")
    return canonical_hull(pts, field=field)


def _pl_to_json(f: PLFunction):
    return [[_enc(x), _enc(y)] for x, y in f.breakpoints]


def _pl_from_json(rows, kind, field):
    return PLFunction(tuple((_dec(x, field), _dec(y, field)) for x, y in rows), kind)


def graph_body_to_json(G: GraphBody) -> dict:
    out = {
        "domain": [_enc(G.floor.lo), _enc(G.floor.hi)],
        "floor": _pl_to_json(G.floor),
        "ceiling": _pl_to_json(G.ceiling),
        "flat": G.flat,
        "frame": None,
    }
    if G.frame is not None:
        out["frame"] = {
            "matrix": [[_enc(c) for c in row] for row in G.frame.matrix],
            "kernel": [_enc(c) for c in G.frame.kernel_dir],
        }
    return out


def graph_body_from_json(data) -> GraphBody:
    field = RATIONAL if all(isinstance(c, str) for c in data["domain"]) else FLOAT
    floor = _pl_from_json(data["floor"], CONVEX, field)
    ceiling = _pl_from_json(data["ceiling"], CONCAVE, field)
    frame = None
    if data.get("frame"):
        fr = data["frame"]
        frame = ShearMap(
            tuple(tuple(_dec(c, field) for c in row) for row in fr["matrix"]),
            tuple(_dec(c, field) for c in fr["kernel"]),
        )
    G = GraphBody(floor, ceiling, frame)
    if "flat" in data and bool(data["flat"]) != G.flat:
        raise ValueError("flat flag does not match the floor and ceiling")
    return G


def verdict_to_json(verdict) -> dict:
    return verdict.to_json()


def write_json(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=False)
        fh.write("\n")


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_reports_csv(path, reports, extra=None):
    """One row per report; ``extra`` is an optional list of leading columns
    as ``(header, values)``."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        head = list(BoundReport.CSV_HEADER)
        if extra:
            head = [h for h, _ in extra] + head
        w.writerow(head)
        for i, rep in enumerate(reports):
            row = rep.csv_row()
            if extra:
                row = [vals[i] for _, vals in extra] + row
            w.writerow(row)
