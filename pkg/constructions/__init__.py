"""
Rainbowless - Constructions
==============================
Lower-bound colorings and closed-form bounds.

Usage:
    from constructions import paley_coloring, layered_lower_bound, evaluate_bounds
"""

from constructions.generators import (
    layered_lower_bound,
    paley_coloring,
    pentagon_coloring,
    rook_coloring,
    matching_extremal,
    p3_forest_lower_bound,
)
from constructions.bounds import ExooBound, BoundsReport, exoo_lower_bound, evaluate_bounds, KNOWN_R
from constructions.seeds import seed_witness

__all__ = [
    "layered_lower_bound",
    "paley_coloring",
    "pentagon_coloring",
    "rook_coloring",
    "matching_extremal",
    "p3_forest_lower_bound",
    "ExooBound",
    "BoundsReport",
    "exoo_lower_bound",
    "evaluate_bounds",
    "KNOWN_R",
    "seed_witness",
]
