"""
Rainbowless - Monochromatic Witnesses
========================================
An embedded copy of a target in one color class, plus the independent
re-validation every detector result goes through.

Vertex layout per target kind:
    complete_bipartite  (side_a, side_b)
    matching            one (u, v) tuple per edge
    p3_forest           one (leaf, center, leaf) tuple per path
    star                ((center,), leaves)
    clique              (members,)
"""

from dataclasses import dataclass
from itertools import combinations

from coloring.model import EdgeColoring
from coloring.targets import TargetGraph, TargetKind


@dataclass(frozen=True)
class MonoWitness:
    """
    A monochromatic copy of ``target`` in color ``color``.

    Attributes:
        color:    Color id the copy lives in.
        target:   The target that was embedded.
        vertices: Embedded vertex groups, layout per target kind.
    """

    color: int
    target: TargetGraph
    vertices: tuple[tuple[int, ...], ...]

    def required_edges(self) -> list[tuple[int, int]]:
        kind = self.target.kind
        if kind is TargetKind.COMPLETE_BIPARTITE:
            side_a, side_b = self.vertices
            return [(a, b) for a in side_a for b in side_b]
        if kind is TargetKind.MATCHING:
            return [tuple(e) for e in self.vertices]
        if kind is TargetKind.P3_FOREST:
            return [e for a, c, b in self.vertices for e in ((a, c), (c, b))]
        if kind is TargetKind.STAR:
            (center,), leaves = self.vertices
            return [(center, leaf) for leaf in leaves]
        (members,) = self.vertices
        return list(combinations(members, 2))

    def all_vertices(self) -> list[int]:
        return [v for group in self.vertices for v in group]

    def to_dict(self) -> dict:
        return {
            "color": self.color,
            "target": self.target.label,
            "vertices": [list(group) for group in self.vertices],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MonoWitness":
        return cls(
            color=int(data["color"]),
            target=TargetGraph.parse(data["target"]),
            vertices=tuple(tuple(int(v) for v in group) for group in data["vertices"]),
        )


def _expected_shape(target: TargetGraph) -> list[int]:
    kind = target.kind
    if kind is TargetKind.COMPLETE_BIPARTITE:
        return [target.size, target.other]
    if kind is TargetKind.MATCHING:
        return [2] * target.size
    if kind is TargetKind.P3_FOREST:
        return [3] * target.size
    if kind is TargetKind.STAR:
        return [1, target.size]
    return [target.size]


def validate_witness(c: EdgeColoring, w: MonoWitness) -> bool:
    """
    Re-check a witness edge by edge against the coloring.

    Uses only ``EdgeColoring.color`` so it shares no code path with the
    bitset detectors.
    """
    shape = sorted(len(g) for g in w.vertices)
    if shape != sorted(_expected_shape(w.target)):
        return False
    flat = w.all_vertices()
    if len(set(flat)) != len(flat):
        return False
    if any(not 0 <= v < c.n for v in flat):
        return False
    if not 0 <= w.color < c.k:
        return False
    return all(c.color(u, v) == w.color for u, v in w.required_edges())
