"""Experiment harness: random bodies, campaigns and report files."""
from .campaign import ExperimentConfig, run_campaign
from .generators import gen_convex_polygon, gen_convex_polytope3, gen_equality_pair

__all__ = [
    "ExperimentConfig",
    "gen_convex_polygon",
    "gen_convex_polytope3",
    "gen_equality_pair",
    "run_campaign",
]
