"""
Rainbowless - Clique Detector
================================
Plain clique search, only there so that the search engine can be checked
against small classical Ramsey numbers.
"""

from coloring.model import EdgeColoring
from coloring.targets import TargetGraph, TargetKind
from detectors import register_detector
from detectors.kernels import find_clique, clique_through
from detectors.witness import MonoWitness


def find_mono_clique(c: EdgeColoring, color: int, p: int) -> MonoWitness | None:
    adj = c.adjacency(color)
    members = find_clique(adj, (1 << c.n) - 1, p)
    if members is None:
        return None
    return MonoWitness(color, TargetGraph.clique(p), (tuple(members),))


def _finder(c: EdgeColoring, color: int, target: TargetGraph) -> MonoWitness | None:
    return find_mono_clique(c, color, target.size)


def _contains(adj, mask: int, target: TargetGraph) -> bool:
    return find_clique(adj, mask, target.size) is not None


def _through(adj, x: int, y: int, target: TargetGraph, n: int) -> bool:
    return clique_through(adj, x, y, target.size)


register_detector(
    kind=TargetKind.CLIQUE,
    description="K_p: recursive clique search on bitsets",
    finder=_finder,
    contains=_contains,
    through_edge=_through,
)
