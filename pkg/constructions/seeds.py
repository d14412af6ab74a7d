"""
Rainbowless - Witness Seeds
==============================
Picks a construction that should avoid a given target list at a given
order, so the number drivers can skip a search on the lower-bound side.

A seed is only returned after the independent detectors accept it.
"""

from typing import Sequence

from coloring.model import EdgeColoring, find_rainbow_triangle, palette_full
from coloring.targets import TargetGraph, TargetKind
from constructions.generators import (
    layered_lower_bound,
    matching_extremal,
    p3_forest_lower_bound,
    paley_coloring,
    pentagon_coloring,
    rook_coloring,
)
from core.errors import GallaiError
from detectors import find_mono_target

# Label -> builder of a 2-coloring of K_{R-1} with no monochromatic H
BASES = {
    "K2,2": pentagon_coloring,
    "K2,3": lambda: rook_coloring(3),
    "K3,3": lambda: paley_coloring(17),
}


def _by_size(targets: Sequence[TargetGraph], build) -> EdgeColoring:
    """Build for sizes sorted descending, then map colors back to target order."""
    order = sorted(range(len(targets)), key=lambda i: -targets[i].size)
    c = build([targets[i].size for i in order])
    return c.recolor(order, k=len(targets))


def _candidate(targets: Sequence[TargetGraph], k: int) -> EdgeColoring | None:
    kinds = {t.kind for t in targets}
    if len(kinds) != 1:
        return None
    kind = kinds.pop()
    if kind is TargetKind.MATCHING:
        return _by_size(targets, matching_extremal)
    if kind is TargetKind.P3_FOREST:
        return _by_size(targets, p3_forest_lower_bound)
    if len(set(targets)) == 1 and targets[0].label in BASES:
        return layered_lower_bound(BASES[targets[0].label](), targets[0], k)
    return None


def seed_witness(targets: Sequence[TargetGraph], k: int, n: int) -> EdgeColoring | None:
    """
    A Gallai k-coloring of K_n that uses all k colors and avoids
    targets[i] in color i, taken from the constructions, or None.
    """
    if len(targets) != k:
        return None
    try:
        c = _candidate(targets, k)
    except GallaiError:
        return None
    if c is None or c.n != n:
        return None
    if not palette_full(c) or find_rainbow_triangle(c) is not None:
        return None
    if find_mono_target(c, list(targets)) is not None:
        return None
    return c
