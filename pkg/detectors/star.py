"""
Rainbowless - Star Detector
==============================
Stars S_t = K_{1,t} (t leaves) and the largest monochromatic star.
"""

from coloring.model import EdgeColoring
from coloring.targets import TargetGraph, TargetKind
from core.errors import TooSmall
from detectors import register_detector
from detectors.kernels import find_star, star_through
from detectors.witness import MonoWitness


def max_mono_star(c: EdgeColoring) -> tuple[int, int, int]:
    """
    (color, center, leaf count) maximizing the color degree.

    Ties go to the lowest color, then the lowest vertex.
    """
    if c.n < 2:
        raise TooSmall("a star needs at least two vertices")
    best = (-1, 0, 0)
    for color in range(c.k):
        for v in range(c.n):
            d = c.degree(v, color)
            if d > best[0]:
                best = (d, color, v)
    leaves, color, center = best
    return color, center, leaves


def find_mono_star(c: EdgeColoring, color: int, t: int) -> MonoWitness | None:
    adj = c.adjacency(color)
    hit = find_star(adj, (1 << c.n) - 1, t)
    if hit is None:
        return None
    center, leaves = hit
    return MonoWitness(color, TargetGraph.star(t), ((center,), leaves))


def _finder(c: EdgeColoring, color: int, target: TargetGraph) -> MonoWitness | None:
    return find_mono_star(c, color, target.size)


def _contains(adj, mask: int, target: TargetGraph) -> bool:
    return find_star(adj, mask, target.size) is not None


def _through(adj, x: int, y: int, target: TargetGraph, n: int) -> bool:
    return star_through(adj, x, y, target.size)


register_detector(
    kind=TargetKind.STAR,
    description="S_t: a vertex of color degree >= t",
    finder=_finder,
    contains=_contains,
    through_edge=_through,
)
