"""
Rainbowless - Linear Forest Detector
=======================================
Monochromatic tP3 (t vertex-disjoint paths on three vertices), the
packing built from a monochromatic matching of large parts, and the
large-part count check for linear-forest-free colorings.
"""

from dataclasses import dataclass
from math import ceil
from typing import TYPE_CHECKING

from coloring.model import EdgeColoring
from coloring.targets import TargetGraph, TargetKind
from core.errors import NotMatchingInColor, PartsTooSmall
from detectors import register_detector
from detectors.kernels import find_p3_packing, p3_forest_through
from detectors.witness import MonoWitness

if TYPE_CHECKING:
    from partition.gallai import GallaiPartition


def find_mono_p3_forest(c: EdgeColoring, color: int, t: int) -> MonoWitness | None:
    """
    Witness of t disjoint P3s in ``color`` or None (exact packing search).

    Raises:
        ColorOutOfRange: ``color`` is not below c.k.
        ValueError:      t < 1.
    """
    if t < 1:
        raise ValueError(f"a linear forest target needs t >= 1, got {t}")
    adj = c.adjacency(color)
    paths = find_p3_packing(adj, (1 << c.n) - 1, t)
    if paths is None:
        return None
    return MonoWitness(color, TargetGraph.p3_forest(t), tuple(paths))


# =============================================================================
# Packing from a matching of parts
# =============================================================================

def p3_packing_from_matching(
    c: EdgeColoring,
    color: int,
    matching: list[tuple[int, int]],
    p: "GallaiPartition",
    n_target: int,
) -> list[tuple[int, int, int]]:
    """
    Build ``n_target`` disjoint P3s in ``color`` from a matching of parts.

    For every matched pair (A, B) up to ceil(n_target / 2t) centers are
    taken in A, each with two fresh leaves in B, and symmetrically from B
    to A, until n_target paths exist.

    Args:
        c:        The coloring the partition belongs to.
        color:    Inter-part color of every matched pair.
        matching: Disjoint pairs of part indices.
        p:        Gallai partition of c.
        n_target: Number of paths wanted.

    Returns:
        (leaf, center, leaf) triples.

    Raises:
        NotMatchingInColor: Pairs overlap, or a pair is not colored ``color``.
        PartsTooSmall:      A matched part cannot host its centers and leaves.
    """
    t = len(matching)
    if t == 0:
        raise NotMatchingInColor("empty matching")
    used = [i for pair in matching for i in pair]
    if len(set(used)) != len(used):
        raise NotMatchingInColor(f"pairs {matching} share a part")
    for i, j in matching:
        if i == j or p.between(i, j) != color:
            raise NotMatchingInColor(f"parts {i} and {j} are not joined in color {color}")

    per = ceil(n_target / (2 * t))
    remaining = n_target
    plan: list[tuple[int, int, int, int]] = []
    for i, j in matching:
        ci = min(per, remaining)
        remaining -= ci
        cj = min(per, remaining)
        remaining -= cj
        plan.append((i, j, ci, cj))

    for i, j, ci, cj in plan:
        for part, centers, leaves in ((i, ci, cj), (j, cj, ci)):
            needed = centers + 2 * leaves
            order = len(p.parts[part])
            if order < needed:
                raise PartsTooSmall(part, order, needed)

    triples: list[tuple[int, int, int]] = []
    for i, j, ci, cj in plan:
        a, b = list(p.parts[i]), list(p.parts[j])
        a_centers, a_leaves = a[:ci], a[ci:ci + 2 * cj]
        b_centers, b_leaves = b[:cj], b[cj:cj + 2 * ci]
        for x, center in enumerate(a_centers):
            triples.append((b_leaves[2 * x], center, b_leaves[2 * x + 1]))
        for x, center in enumerate(b_centers):
            triples.append((a_leaves[2 * x], center, a_leaves[2 * x + 1]))

    for leaf_a, center, leaf_b in triples:
        if c.color(leaf_a, center) != color or c.color(center, leaf_b) != color:
            raise NotMatchingInColor(f"path {(leaf_a, center, leaf_b)} leaves color {color}")
    return triples


# =============================================================================
# Large parts
# =============================================================================

@dataclass
class LargePartCheck:
    """
    Count of parts at or above the large-part threshold.

    Attributes:
        threshold: 3 * n_red / (2t), compared as a real number.
        count:     Parts of order >= threshold.
        limit:     3t - 2.
        large:     Indices of the counted parts.
    """

    threshold: float
    count: int
    limit: int
    large: list[int]

    @property
    def ok(self) -> bool:
        return self.count <= self.limit


def large_part_bound_check(p: "GallaiPartition", n_red: int, t: int) -> LargePartCheck:
    if t < 1 or n_red < 1:
        raise ValueError(f"need t >= 1 and n_red >= 1, got t={t}, n_red={n_red}")
    threshold = 3 * n_red / (2 * t)
    large = [i for i, part in enumerate(p.parts) if len(part) >= threshold]
    return LargePartCheck(threshold, len(large), 3 * t - 2, large)


# -- Registry hooks ----------------------------------------------------------

def _finder(c: EdgeColoring, color: int, target: TargetGraph) -> MonoWitness | None:
    return find_mono_p3_forest(c, color, target.size)


def _contains(adj, mask: int, target: TargetGraph) -> bool:
    return find_p3_packing(adj, mask, target.size) is not None


def _through(adj, x: int, y: int, target: TargetGraph, n: int) -> bool:
    return p3_forest_through(adj, x, y, target.size, n)


register_detector(
    kind=TargetKind.P3_FOREST,
    description="tP3: exact P3-packing by branching on the lowest vertex",
    finder=_finder,
    contains=_contains,
    through_edge=_through,
)
