"""
Rainbowless - Search Problems and Certificates
=================================================
What a search run is asked (SearchProblem) and what it proves
(Certificate).  Outcomes are plain values; a run that hits its budget
still returns a certificate with full statistics.
"""

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import yaml

from coloring.model import EdgeColoring, MAX_VERTICES, find_rainbow_triangle, palette_full
from coloring.targets import TargetGraph
from core.errors import ArityMismatch, TooLarge
from detectors import find_mono_target

CANONICITY_MODES = ("full", "cheap", "off")


class Outcome(str, Enum):
    EXHAUSTED = "EXHAUSTED"
    WITNESS = "WITNESS"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass
class SearchProblem:
    """
    Does some coloring of K_n avoid every color's target?

    Attributes:
        n:                  Order under test.
        k:                  Number of colors.
        per_color_targets:  Color i must avoid per_color_targets[i].
        gallai_constraint:  Forbid rainbow triangles.
        require_all_colors: Accept only colorings using all k colors.
        budget:             Node limit.
        vertex_symmetry:    Orderly generation on vertices.
        color_symmetry:     Treat colors with equal targets as interchangeable.
        canonicity:         "full" (lex-min over all vertex permutations),
                            "cheap" (transpositions only) or "off".
        canonicity_threshold: Node count after which "full" degrades to "cheap".
        blobs:              Part orders for the blow-up family; pairs inside
                            a part get ``inner_color``, pairs between parts
                            colors 0 and 1.  None for plain colorings.
        inner_color:        Color of within-part pairs in blob mode.
    """

    n: int
    k: int
    per_color_targets: list[TargetGraph]
    gallai_constraint: bool = False
    require_all_colors: bool = False
    budget: int = 10**9
    vertex_symmetry: bool = True
    color_symmetry: bool = True
    canonicity: str = "full"
    canonicity_threshold: int = 50_000_000
    blobs: list[int] | None = None
    inner_color: int | None = None

    def __post_init__(self):
        if len(self.per_color_targets) != self.k:
            raise ArityMismatch(f"{len(self.per_color_targets)} targets for {self.k} colors")
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.n > MAX_VERTICES:
            raise TooLarge(f"n={self.n} exceeds the {MAX_VERTICES}-vertex cap")
        if self.canonicity not in CANONICITY_MODES:
            raise ValueError(f"canonicity must be one of {CANONICITY_MODES}")
        if self.blobs is not None:
            if sum(self.blobs) != self.n:
                raise ArityMismatch(f"part orders {self.blobs} do not sum to {self.n}")
            if self.inner_color is None or not 0 <= self.inner_color < self.k:
                raise ValueError("blob mode needs an inner color below k")

    @property
    def blob_mode(self) -> bool:
        return self.blobs is not None

    def outer_palette(self) -> list[int]:
        """Colors the search assigns to (reduced) pairs."""
        if self.blob_mode:
            return [c for c in range(self.k) if c != self.inner_color][:2]
        return list(range(self.k))

    def to_dict(self) -> dict:
        data = {
            "n": self.n,
            "k": self.k,
            "targets": [t.label for t in self.per_color_targets],
            "gallai_constraint": self.gallai_constraint,
            "require_all_colors": self.require_all_colors,
            "budget": self.budget,
            "vertex_symmetry": self.vertex_symmetry,
            "color_symmetry": self.color_symmetry,
            "canonicity": self.canonicity,
            "canonicity_threshold": self.canonicity_threshold,
        }
        if self.blob_mode:
            data["blobs"] = list(self.blobs)
            data["inner_color"] = self.inner_color
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "SearchProblem":
        return cls(
            n=int(data["n"]),
            k=int(data["k"]),
            per_color_targets=[TargetGraph.parse(t) for t in data["targets"]],
            gallai_constraint=bool(data.get("gallai_constraint", False)),
            require_all_colors=bool(data.get("require_all_colors", False)),
            budget=int(data.get("budget", 10**9)),
            vertex_symmetry=bool(data.get("vertex_symmetry", True)),
            color_symmetry=bool(data.get("color_symmetry", True)),
            canonicity=data.get("canonicity", "full"),
            canonicity_threshold=int(data.get("canonicity_threshold", 50_000_000)),
            blobs=data.get("blobs"),
            inner_color=data.get("inner_color"),
        )

    def problem_hash(self) -> str:
        """Identity of the search space; the budget does not change it."""
        key = {k: v for k, v in self.to_dict().items() if k != "budget"}
        text = yaml.safe_dump(key, sort_keys=True)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class SearchStats:
    """Node and prune counters for one run."""

    nodes: int = 0
    prunes: dict[str, int] = field(default_factory=lambda: {
        "rainbow": 0, "target": 0, "symmetry": 0, "palette": 0,
    })
    wall_time: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        for key, value in other.prunes.items():
            self.prunes[key] = self.prunes.get(key, 0) + value
        self.wall_time = max(self.wall_time, other.wall_time)

    def to_dict(self) -> dict:
        return {"nodes": self.nodes, "prunes": dict(self.prunes), "wall_time": round(self.wall_time, 3)}

    @classmethod
    def from_dict(cls, data: dict) -> "SearchStats":
        stats = cls(nodes=int(data.get("nodes", 0)), wall_time=float(data.get("wall_time", 0.0)))
        stats.prunes.update({k: int(v) for k, v in (data.get("prunes") or {}).items()})
        return stats


@dataclass
class Certificate:
    """
    Outcome of a search.

    Attributes:
        problem:       The problem that was run.
        outcome:       EXHAUSTED, WITNESS or BUDGET_EXCEEDED.
        witness:       Avoiding coloring when outcome is WITNESS.
        stats:         Counters.
        checkpoint_id: Problem hash of the checkpoint this run resumed from.
        notes:         Free-text provenance lines.
        extra:         Structured extras (reduction multisets, seeds, ...).
    """

    problem: SearchProblem
    outcome: Outcome
    witness: EdgeColoring | None = None
    stats: SearchStats = field(default_factory=SearchStats)
    checkpoint_id: str | None = None
    notes: list[str] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def exhausted(self) -> bool:
        return self.outcome is Outcome.EXHAUSTED

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.WITNESS


def witness_is_valid(problem: SearchProblem, c: EdgeColoring) -> bool:
    """Re-check a witness with the standalone detectors."""
    if c.n != problem.n or c.k != problem.k:
        return False
    if problem.gallai_constraint and find_rainbow_triangle(c) is not None:
        return False
    if problem.require_all_colors and not palette_full(c):
        return False
    return find_mono_target(c, problem.per_color_targets) is None
