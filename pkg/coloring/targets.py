"""
Rainbowless - Target Graphs
==============================
Symbolic description of the monochromatic subgraph a color must avoid.

Labels accepted by ``TargetGraph.parse`` (used by the CLI and in
certificate files):

    K2,3   complete bipartite K_{2,3}     C4   alias for K2,2
    3P2    matching with 3 edges          P2   one edge
    2P3    two disjoint 3-vertex paths    P3   one path
    S5     star with 5 leaves             K3   clique of order 3 (K2 is P2)
"""

import re
from dataclasses import dataclass
from enum import Enum

from core.errors import UnsupportedTarget


class TargetKind(str, Enum):
    COMPLETE_BIPARTITE = "complete_bipartite"
    MATCHING = "matching"
    P3_FOREST = "p3_forest"
    STAR = "star"
    CLIQUE = "clique"


@dataclass(frozen=True)
class TargetGraph:
    """
    A monochromatic target H.

    ``size`` is the leading parameter (ℓ, t or p); ``other`` is the large
    side m of a complete bipartite target and unused otherwise.
    """

    kind: TargetKind
    size: int
    other: int = 0

    def __post_init__(self):
        if self.size < 1:
            raise UnsupportedTarget(f"{self.kind.value} needs size >= 1, got {self.size}")
        if self.kind is TargetKind.COMPLETE_BIPARTITE:
            if self.other < self.size:
                raise UnsupportedTarget(f"K_{{l,m}} needs l <= m, got ({self.size}, {self.other})")
        if self.kind is TargetKind.CLIQUE and self.size < 3:
            raise UnsupportedTarget(f"clique targets need order >= 3, got K{self.size}; use P2 for one edge")

    # -- Constructors ---------------------------------------------------------

    @classmethod
    def complete_bipartite(cls, l: int, m: int) -> "TargetGraph":
        l, m = min(l, m), max(l, m)
        return cls(TargetKind.COMPLETE_BIPARTITE, l, m)

    @classmethod
    def matching(cls, t: int) -> "TargetGraph":
        return cls(TargetKind.MATCHING, t)

    @classmethod
    def p3_forest(cls, t: int) -> "TargetGraph":
        return cls(TargetKind.P3_FOREST, t)

    @classmethod
    def star(cls, t: int) -> "TargetGraph":
        return cls(TargetKind.STAR, t)

    @classmethod
    def clique(cls, p: int) -> "TargetGraph":
        if p == 2:
            return cls.matching(1)
        return cls(TargetKind.CLIQUE, p)

    @classmethod
    def parse(cls, label: str) -> "TargetGraph":
        text = label.strip().upper().replace(" ", "").replace("_", "")
        if text == "C4":
            return cls.complete_bipartite(2, 2)
        m = re.fullmatch(r"K\{?(\d+),(\d+)\}?", text)
        if m:
            return cls.complete_bipartite(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"K(\d+)", text)
        if m:
            return cls.clique(int(m.group(1)))
        m = re.fullmatch(r"(\d*)P([23])", text)
        if m:
            count = int(m.group(1) or 1)
            return cls.matching(count) if m.group(2) == "2" else cls.p3_forest(count)
        m = re.fullmatch(r"S(\d+)", text)
        if m:
            return cls.star(int(m.group(1)))
        raise UnsupportedTarget(f"cannot parse target label {label!r}")

    # -- Derived quantities ---------------------------------------------------

    @property
    def is_bipartite(self) -> bool:
        return self.kind is not TargetKind.CLIQUE

    @property
    def s_value(self) -> int:
        """Order of the smallest side of the bipartition."""
        if self.kind is TargetKind.COMPLETE_BIPARTITE:
            return self.size
        if self.kind in (TargetKind.MATCHING, TargetKind.P3_FOREST):
            return self.size
        if self.kind is TargetKind.STAR:
            return 1
        raise UnsupportedTarget(f"{self.label} is not bipartite; s(H) undefined")

    @property
    def order(self) -> int:
        """|H|, the number of vertices."""
        if self.kind is TargetKind.COMPLETE_BIPARTITE:
            return self.size + self.other
        if self.kind is TargetKind.MATCHING:
            return 2 * self.size
        if self.kind is TargetKind.P3_FOREST:
            return 3 * self.size
        if self.kind is TargetKind.STAR:
            return self.size + 1
        return self.size

    @property
    def edge_count(self) -> int:
        if self.kind is TargetKind.COMPLETE_BIPARTITE:
            return self.size * self.other
        if self.kind is TargetKind.MATCHING:
            return self.size
        if self.kind is TargetKind.P3_FOREST:
            return 2 * self.size
        if self.kind is TargetKind.STAR:
            return self.size
        return self.size * (self.size - 1) // 2

    @property
    def label(self) -> str:
        if self.kind is TargetKind.COMPLETE_BIPARTITE:
            return f"K{self.size},{self.other}"
        if self.kind is TargetKind.MATCHING:
            return f"{self.size}P2" if self.size > 1 else "P2"
        if self.kind is TargetKind.P3_FOREST:
            return f"{self.size}P3" if self.size > 1 else "P3"
        if self.kind is TargetKind.STAR:
            return f"S{self.size}"
        return f"K{self.size}"

    def __str__(self) -> str:
        return self.label
