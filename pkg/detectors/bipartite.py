"""
Rainbowless - Complete Bipartite Detector
============================================
Monochromatic K_{l,m} as a (not necessarily induced) subgraph: an l-set
whose common neighborhood in the color has at least m vertices.
"""

from coloring.model import EdgeColoring
from coloring.targets import TargetGraph, TargetKind
from detectors import register_detector
from detectors.kernels import find_complete_bipartite, complete_bipartite_through
from detectors.witness import MonoWitness


def find_mono_complete_bipartite(c: EdgeColoring, color: int, l: int, m: int) -> MonoWitness | None:
    """
    Witness of a monochromatic K_{l,m} in ``color`` or None.

    Raises:
        ColorOutOfRange: ``color`` is not below c.k.
        ValueError:      l > m.
    """
    if l > m:
        raise ValueError(f"K_{{l,m}} needs l <= m, got ({l}, {m})")
    adj = c.adjacency(color)
    hit = find_complete_bipartite(adj, c.n, l, m)
    if hit is None:
        return None
    side_a, side_b = hit
    return MonoWitness(color, TargetGraph.complete_bipartite(l, m), (side_a, side_b))


def _finder(c: EdgeColoring, color: int, target: TargetGraph) -> MonoWitness | None:
    return find_mono_complete_bipartite(c, color, target.size, target.other)


def _contains(adj, mask: int, target: TargetGraph) -> bool:
    return find_complete_bipartite(adj, len(adj), target.size, target.other, mask) is not None


def _through(adj, x: int, y: int, target: TargetGraph, n: int) -> bool:
    return complete_bipartite_through(adj, x, y, target.size, target.other)


register_detector(
    kind=TargetKind.COMPLETE_BIPARTITE,
    description="K_{l,m}: l-subsets with a common neighborhood of size >= m",
    finder=_finder,
    contains=_contains,
    through_edge=_through,
)
