"""Convex polytope primitives: hulls, volumes, sums, projections, sections."""
from .core import (
    align_max_slice,
    as_float,
    canonical_hull,
    centroid,
    mass_centroid,
    chart,
    dilate,
    hausdorff_distance,
    hausdorff_distance_squared,
    homothetic_image,
    homothety_candidate,
    homothety_find,
    linear_image,
    max_slice,
    minkowski_sum,
    pairwise_sum_hull,
    polygon_from_lattice,
    project,
    slice,
    slice_measure,
    translate,
    volume,
)
from .polytope import EmptySlice, HomothetyWitness, Polytope, interval

__all__ = [
    "EmptySlice",
    "HomothetyWitness",
    "Polytope",
    "align_max_slice",
    "as_float",
    "canonical_hull",
    "centroid",
    "mass_centroid",
    "chart",
    "dilate",
    "hausdorff_distance",
    "hausdorff_distance_squared",
    "homothetic_image",
    "homothety_candidate",
    "homothety_find",
    "interval",
    "linear_image",
    "max_slice",
    "minkowski_sum",
    "pairwise_sum_hull",
    "polygon_from_lattice",
    "project",
    "slice",
    "slice_measure",
    "translate",
    "volume",
]
