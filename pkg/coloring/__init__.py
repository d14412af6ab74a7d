"""
Rainbowless - Coloring Core
==============================
Edge-colored complete graphs, target descriptions and substitution.

Usage:
    from coloring import EdgeColoring, TargetGraph, find_rainbow_triangle
"""

from coloring.model import (
    EdgeColoring,
    ColoringBuilder,
    new_coloring,
    palette_full,
    find_rainbow_triangle,
    color_class,
    pair_index,
    iter_pairs,
    bits,
    MAX_VERTICES,
)
from coloring.targets import TargetGraph, TargetKind
from coloring.substitution import substitute, contract, blob_ranges

__all__ = [
    "EdgeColoring",
    "ColoringBuilder",
    "new_coloring",
    "palette_full",
    "find_rainbow_triangle",
    "color_class",
    "pair_index",
    "iter_pairs",
    "bits",
    "MAX_VERTICES",
    "TargetGraph",
    "TargetKind",
    "substitute",
    "contract",
    "blob_ranges",
]
