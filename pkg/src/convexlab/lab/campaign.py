"""Campaigns: run many seeded trials and write reports.csv, verdicts.json
and gallery.svg into the output directory."""
from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ..bounds import (
    PROJECTION,
    SLICE,
    SeparablePL,
    full_report,
    hypograph,
    lemma_delta_bound,
    lemma_eps_bound,
    slope_gap,
)
from ..certifier import decide_equality_projection, verify_decomposition
from ..convex_core import as_float, minkowski_sum, volume
from ..graph_body import CONCAVE, PLFunction, from_polytope
from ..io import write_json, write_reports_csv
from ..scalars import format_fraction
from .generators import (
    gen_convex_polygon,
    gen_convex_polytope3,
    gen_equality_pair,
    random_direction,
    regular_polygon,
    trial_rng,
)
from .svg import MAX_PANELS, render_gallery

log = logging.getLogger(__name__)

MODES = ("chain", "certify", "lemma", "convergence")


@dataclass
class ExperimentConfig:
    mode: str = "chain"
    seed: int = 0
    trials: int = 100
    dim: int = 2
    vertex_range: tuple = (3, 12)
    denom_bound: int = 10_000
    output_dir: str = "lab_out"
    field_mode: str = field(default_factory=lambda: os.environ.get("LAB_MODE", "exact"))

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.dim not in (2, 3):
            raise ValueError("dim must be 2 or 3")
        if self.mode == "convergence" and self.dim != 2:
            raise ValueError("convergence runs in the plane only")
        lo, hi = self.vertex_range
        if not 3 <= lo <= hi:
            raise ValueError("vertex range must satisfy 3 <= MIN <= MAX")
        if self.denom_bound < 1:
            raise ValueError("denominator bound must be positive")
        if self.field_mode not in ("exact", "float"):
            raise ValueError("LAB_MODE must be 'exact' or 'float'")

    @property
    def exact(self):
        return self.dim == 2 and self.field_mode == "exact"


def _fmt(v):
    if isinstance(v, (int, Fraction)):
        return format_fraction(v)
    return float(v)


def _body(cfg, rng):
    k = rng.randint(*cfg.vertex_range)
    if cfg.dim == 3:
        return gen_convex_polytope3(rng, max(4, k))
    P = gen_convex_polygon(rng, k, cfg.denom_bound)
    return P if cfg.exact else as_float(P)


# ---------------------------------------------------------------------------
# modes


def _chain(cfg):
    reports, extra_trial, extra_source, panels = [], [], [], []
    violations = 0
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, t)
        A, B = _body(cfg, rng), _body(cfg, rng)
        k = random_direction(rng, cfg.dim)
        # slice sections are only searched exactly in the plane
        source = SLICE if cfg.dim == 2 and t % 2 else PROJECTION
        S = minkowski_sum(A, B)
        rep = full_report(A, B, k, source, sum_body=S)
        if not rep.chain_ok:
            violations += 1
            log.error("trial %d: chain violated (%s)", t, rep.to_json())
        reports.append(rep)
        extra_trial.append(t)
        extra_source.append(source)
        if len(panels) < MAX_PANELS:
            panels.append((f"#{t}", [A, B, S]))
    summary = {"chain_violations": violations}
    return reports, [("trial", extra_trial), ("source", extra_source)], [], panels, summary


def _certify(cfg):
    reports, rows_trial, rows_kind, verdicts, panels = [], [], [], [], []
    confusion = {"equal": {"equal": 0, "unequal": 0}, "unequal": {"equal": 0, "unequal": 0}}
    bad_witness = 0
    max_gap = 0
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, t)
        constructed = t % 2 == 0
        if constructed:
            A, B, truth = gen_equality_pair(rng, dim=cfg.dim, vertices=cfg.vertex_range)
            if cfg.dim == 2 and not cfg.exact:
                A, B = as_float(A), as_float(B)
            k = truth.shear.kernel_dir
        else:
            A, B = _body(cfg, rng), _body(cfg, rng)
            k = random_direction(rng, cfg.dim)
        rep = full_report(A, B, k, PROJECTION)
        expected = constructed or rep.equality_bonnesen
        try:
            verdict = decide_equality_projection(A, B, k, report=rep)
        except AssertionError as exc:
            # verdict and gap disagree: count it against the diagonal
            log.error("trial %d: %s", t, exc)
            confusion["equal" if expected else "unequal"]["unequal" if expected else "equal"] += 1
            continue
        if constructed:
            max_gap = max(max_gap, abs(rep.gap_bonnesen))
        confusion["equal" if expected else "unequal"]["equal" if verdict.equal else "unequal"] += 1
        if verdict.equal:
            tol = 0 if cfg.exact else 1e-6
            if not verify_decomposition(A, B, verdict.decomposition, tol=tol):
                bad_witness += 1
                log.error("trial %d: decomposition does not reproduce the pair", t)
        reports.append(rep)
        rows_trial.append(t)
        rows_kind.append("constructed" if constructed else "random")
        verdicts.append({"trial": t, "constructed": constructed, "kernel": [_fmt(c) for c in k],
                         **verdict.to_json()})
        if len(panels) < MAX_PANELS:
            panels.append((f"#{t} {'eq' if verdict.equal else 'ne'}", [A, B, minkowski_sum(A, B)]))
    off_diagonal = confusion["equal"]["unequal"] + confusion["unequal"]["equal"]
    eq_gap_ok = max_gap == 0 if cfg.exact else max_gap <= 1e-9 * 100
    summary = {
        "confusion": confusion,
        "off_diagonal": off_diagonal,
        "bad_witnesses": bad_witness,
        "max_gap_on_equality_pairs": _fmt(max_gap),
        "equality_gap_ok": eq_gap_ok,
    }
    return reports, [("trial", rows_trial), ("kind", rows_kind)], verdicts, panels, summary


def random_concave_pl(rng, length, pieces, slope_lo=-3, slope_hi=3, den=8):
    """Nonnegative concave PL function on ``[0, length]`` with rational data."""
    cuts = sorted({Fraction(rng.randint(1, den * length - 1), den) for _ in range(pieces - 1)}
                  if den * length > 1 else set())
    xs = [Fraction(0)] + cuts + [Fraction(length)]
    slopes = sorted((Fraction(rng.randint(slope_lo * den, slope_hi * den), den)
                     for _ in range(len(xs) - 1)), reverse=True)
    ys = [Fraction(0)]
    for i, s in enumerate(slopes):
        ys.append(ys[-1] + s * (xs[i + 1] - xs[i]))
    lift = -min(ys) + Fraction(rng.randint(1, 4 * den), den)
    return PLFunction(tuple((x, y + lift) for x, y in zip(xs, ys)), CONCAVE)


def _lemma(cfg):
    reports, extra, panels = [], {"trial": [], "delta": [], "lemma": [], "eps": [], "eps_bound": []}, []
    violations = 0
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, t)
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        separated = rng.random() < 0.5
        cut = rng.randint(-2, 2)
        if separated:
            f = random_concave_pl(rng, m, rng.randint(1, 5), slope_lo=cut, slope_hi=cut + 3)
            g = random_concave_pl(rng, n, rng.randint(1, 5), slope_lo=cut - 3, slope_hi=cut)
        else:
            f = random_concave_pl(rng, m, rng.randint(1, 5))
            g = random_concave_pl(rng, n, rng.randint(1, 5))
        if cfg.dim == 3:
            f = SeparablePL(f, random_concave_pl(rng, m, 2))
            g = SeparablePL(g, random_concave_pl(rng, n, 2))
        eps = slope_gap(f, g)
        try:
            if cfg.dim == 2:
                A, B = hypograph(f), hypograph(g)
                delta, bound = lemma_delta_bound(f, g)
                rep = full_report(A, B, (0, 1), PROJECTION)
            else:
                A, B = f.hypograph(), g.hypograph()
                delta, bound = None, None
                rep = full_report(A, B, (0, 0, 1), PROJECTION)
            eps_bound = lemma_eps_bound(f, g, eps, d=cfg.dim) if eps >= 0 else None
        except AssertionError as exc:
            violations += 1
            log.error("trial %d: lemma bound violated: %s", t, exc)
            continue
        reports.append(rep)
        extra["trial"].append(t)
        extra["delta"].append("" if delta is None else format_fraction(delta))
        extra["lemma"].append("" if bound is None else format_fraction(bound))
        extra["eps"].append(f"{float(eps):.12g}")
        extra["eps_bound"].append("" if eps_bound is None else f"{float(eps_bound):.12g}")
        if len(panels) < MAX_PANELS:
            panels.append((f"#{t}", [A, B, minkowski_sum(A, B)]))
    summary = {"lemma_violations": violations}
    return reports, list(extra.items()), [], panels, summary


def _convergence(cfg):
    """Regular k-gons against the disk: area error per doubling of k."""
    reports, panels, rows = [], [], []
    steps = min(cfg.trials, 12)
    violations = 0
    prev_err = None
    for i in range(steps):
        k = 4 * 2**i
        P, Q = regular_polygon(k), regular_polygon(2 * k)
        G = from_polytope(P)
        sampled = G.volume
        exact = k / 2 * math.sin(2 * math.pi / k)
        err = math.pi - sampled
        ratio = prev_err / err if prev_err else None
        if abs(sampled - exact) > 1e-9 or (ratio is not None and ratio < 2):
            violations += 1
        prev_err = err
        reports.append(full_report(P, Q, (0, 1), PROJECTION))
        rows.append((k, sampled, exact, err, ratio))
        if len(panels) < MAX_PANELS:
            panels.append((f"k={k}", [P, Q]))
    extra = [
        ("k", [r[0] for r in rows]),
        ("graph_volume", [f"{r[1]:.12g}" for r in rows]),
        ("kgon_area", [f"{r[2]:.12g}" for r in rows]),
        ("disk_error", [f"{r[3]:.6e}" for r in rows]),
        ("error_ratio", ["" if r[4] is None else f"{r[4]:.6f}" for r in rows]),
    ]
    summary = {"convergence_violations": violations,
               "error_ratios": [None if r[4] is None else round(r[4], 6) for r in rows]}
    return reports, extra, [], panels, summary


_RUNNERS = {"chain": _chain, "certify": _certify, "lemma": _lemma, "convergence": _convergence}


def run_campaign(cfg: ExperimentConfig):
    """Run the campaign and write its files; returns the summary dict.

    ``summary["violations"]`` is the total count of failed invariants.
    """
    reports, extra, verdicts, panels, summary = _RUNNERS[cfg.mode](cfg)
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_reports_csv(out / "reports.csv", reports, extra)
    write_json(out / "verdicts.json", verdicts)
    (out / "gallery.svg").write_text(render_gallery(panels, cfg.mode), encoding="utf-8")
    violations = sum(
        summary.get(key, 0)
        for key in ("chain_violations", "off_diagonal", "bad_witnesses",
                    "lemma_violations", "convergence_violations")
    )
    if summary.get("equality_gap_ok") is False:
        violations += 1
    summary.update({"mode": cfg.mode, "trials": cfg.trials, "dim": cfg.dim,
                    "seed": cfg.seed, "violations": violations})
    write_json(out / "summary.json", summary)
    return summary
