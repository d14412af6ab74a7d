"""
Rainbowless - Target Dispatch
================================
Route a per-color target list to the registered detectors.
"""

from typing import Sequence

from coloring.model import EdgeColoring
from coloring.targets import TargetGraph
from core.errors import ArityMismatch, UnsupportedTarget
from detectors import get_detector
from detectors.witness import MonoWitness


def _entry(target: TargetGraph) -> dict:
    entry = get_detector(target.kind)
    if entry is None:
        raise UnsupportedTarget(f"no detector registered for {target.kind.value}")
    return entry


def find_mono_target(
    c: EdgeColoring,
    per_color_targets: Sequence[TargetGraph],
) -> MonoWitness | None:
    """
    First monochromatic copy of color i's target in color i, scanning
    colors 0..k-1, or None if every color avoids its target.

    Raises:
        ArityMismatch:     len(per_color_targets) != c.k.
        UnsupportedTarget: A target kind has no registered detector.
    """
    if len(per_color_targets) != c.k:
        raise ArityMismatch(f"{len(per_color_targets)} targets for {c.k} colors")
    entries = [_entry(t) for t in per_color_targets]
    for color, (target, entry) in enumerate(zip(per_color_targets, entries)):
        witness = entry["finder"](c, color, target)
        if witness is not None:
            return witness
    return None


def contains_target(adj: Sequence[int], mask: int, target: TargetGraph) -> bool:
    """Does the bitset graph restricted to ``mask`` contain ``target``?"""
    return _entry(target)["contains"](adj, mask, target)


def edge_completes_target(
    adj: Sequence[int], x: int, y: int, target: TargetGraph, n: int,
) -> bool:
    """Does some copy of ``target`` in ``adj`` use the edge xy?"""
    return _entry(target)["through_edge"](adj, x, y, target, n)
