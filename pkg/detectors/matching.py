"""
Rainbowless - Matching Detector
==================================
Monochromatic tP2: a maximum matching of the color class, computed
exactly with networkx's blossom implementation.
"""

import networkx as nx

from coloring.model import EdgeColoring, color_class
from coloring.targets import TargetGraph, TargetKind
from detectors import register_detector
from detectors.kernels import find_matching, matching_through
from detectors.witness import MonoWitness


def maximum_matching(c: EdgeColoring, color: int) -> list[tuple[int, int]]:
    """A maximum matching of the color class, edges as sorted pairs."""
    g = color_class(c, color)
    matched = nx.max_weight_matching(g, maxcardinality=True)
    return sorted(tuple(sorted(e)) for e in matched)


def find_mono_matching(c: EdgeColoring, color: int, t: int) -> MonoWitness | None:
    """
    Witness of t disjoint edges in ``color`` or None.

    Raises:
        ColorOutOfRange: ``color`` is not below c.k.
        ValueError:      t < 1.
    """
    if t < 1:
        raise ValueError(f"a matching target needs t >= 1, got {t}")
    edges = maximum_matching(c, color)
    if len(edges) < t:
        return None
    return MonoWitness(color, TargetGraph.matching(t), tuple(edges[:t]))


def _finder(c: EdgeColoring, color: int, target: TargetGraph) -> MonoWitness | None:
    return find_mono_matching(c, color, target.size)


def _contains(adj, mask: int, target: TargetGraph) -> bool:
    return find_matching(adj, mask, target.size) is not None


def _through(adj, x: int, y: int, target: TargetGraph, n: int) -> bool:
    return matching_through(adj, x, y, target.size, n)


register_detector(
    kind=TargetKind.MATCHING,
    description="tP2: maximum matching (blossom) of the color class",
    finder=_finder,
    contains=_contains,
    through_edge=_through,
)
