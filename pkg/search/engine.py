"""
Rainbowless - Branch-and-Prune Engine
========================================
Depth-first search over colorings of K_n, one pair at a time in column
order.  Every assignment is checked in a fixed order:

    1. rainbow  -- the pair closes a rainbow triangle (Gallai problems)
    2. target   -- the pair completes a monochromatic target
    3. symmetry -- interchangeable colors out of first-occurrence order,
                   or the completed vertex prefix is not lex-minimal

In blob mode the search runs on the reduced graph: vertex i stands for a
whole part, a reduced pair colors every pair between two parts, and the
within-part pairs are fixed to the inner color from the start.

The stack is an array of "next color to try" counters, so it serializes
directly into a checkpoint and a resumed run continues exactly where the
saved one stopped.
"""

import random
import threading
import time
from typing import Callable

from coloring.model import ColoringBuilder, EdgeColoring
from coloring.substitution import blob_ranges
from core.errors import CheckpointMismatch
from core.logger import RunLogger
from detectors import contains_target, edge_completes_target
from search.problem import Certificate, Outcome, SearchProblem, SearchStats, witness_is_valid
from search.symmetry import class_lookup, color_classes, color_maps, first_occurrence_ok, is_canonical

# Nodes taken from a shared budget at a time
BUDGET_CHUNK = 4096


class NodeBudget:
    """
    Node allowance shared by every worker of one run.

    Attributes:
        total:     Initial allowance.
        remaining: Nodes not yet handed out.
    """

    def __init__(self, total: int):
        self.total = total
        self.remaining = total
        self._lock = threading.Lock()

    def take(self, want: int) -> int:
        with self._lock:
            got = min(want, self.remaining)
            self.remaining -= got
            return got


class SearchEngine:
    """
    One depth-first search over a SearchProblem.

    Not thread-safe; each worker owns its engine.

    Attributes:
        problem: The problem being searched.
        stats:   Counters of this engine's work.
        stopped: Set when the run ended because the stop event fired.
    """

    def __init__(
        self,
        problem: SearchProblem,
        logger: RunLogger | None = None,
        budget: NodeBudget | None = None,
        stop_event: threading.Event | None = None,
        progress_every: int = 250_000,
        checkpoint_path: str | None = None,
        checkpoint_every: int = 1_000_000,
        checkpoint_writer: Callable[[str, dict], None] | None = None,
    ):
        self.problem = problem
        self.logger = logger
        self.budget = budget or NodeBudget(problem.budget)
        self.stop_event = stop_event
        self.progress_every = progress_every
        self.checkpoint_path = checkpoint_path
        self.checkpoint_every = checkpoint_every
        self.checkpoint_writer = checkpoint_writer
        self.stats = SearchStats()
        self.stopped = False
        self._allowance = 0

        p = problem
        self.sizes = list(p.blobs) if p.blob_mode else [1] * p.n
        self.m = len(self.sizes)
        self.edges = [(u, v) for v in range(1, self.m) for u in range(v)]
        self.palette = p.outer_palette()
        self.builder = ColoringBuilder(self.m, p.k)
        self.mat = [[-1] * self.m for _ in range(self.m)]
        self.full_mask = (1 << p.n) - 1

        if p.blob_mode:
            self.members = blob_ranges(self.sizes)
            self.blob_mask = [sum(1 << x for x in block) for block in self.members]
            self.xadj = [[0] * p.n for _ in range(p.k)]
            for block, mask in zip(self.members, self.blob_mask):
                for x in block:
                    self.xadj[p.inner_color][x] = mask & ~(1 << x)
            self.size_class = list(self.sizes)
        else:
            self.xadj = self.builder.adj
            self.size_class = [0] * self.m

        if p.color_symmetry:
            classes = color_classes(p.per_color_targets, self.palette)
        else:
            classes = [[c] for c in self.palette]
        self.below = class_lookup(classes, p.k)
        self.sigmas = color_maps(classes, p.k) if p.color_symmetry else [list(range(p.k))]

    # -- Assignment -----------------------------------------------------------

    def _assign(self, u: int, v: int, color: int) -> None:
        self.builder.assign(u, v, color)
        self.mat[u][v] = self.mat[v][u] = color
        if self.problem.blob_mode:
            adj = self.xadj[color]
            for x in self.members[u]:
                adj[x] |= self.blob_mask[v]
            for y in self.members[v]:
                adj[y] |= self.blob_mask[u]

    def _unassign(self, u: int, v: int) -> None:
        color = self.mat[u][v]
        self.builder.unassign(u, v)
        self.mat[u][v] = self.mat[v][u] = -1
        if self.problem.blob_mode and color >= 0:
            adj = self.xadj[color]
            for x in self.members[u]:
                adj[x] &= ~self.blob_mask[v]
            for y in self.members[v]:
                adj[y] &= ~self.blob_mask[u]

    def _hits_target(self, u: int, v: int, color: int) -> bool:
        target = self.problem.per_color_targets[color]
        if self.problem.blob_mode:
            return contains_target(self.xadj[color], self.full_mask, target)
        return edge_completes_target(self.builder.adj[color], u, v, target, self.m)

    def _cheap(self) -> bool:
        mode = self.problem.canonicity
        return mode == "cheap" or (mode == "full" and self.stats.nodes > self.problem.canonicity_threshold)

    def _try(self, level: int, color: int) -> str | None:
        """Assign ``color`` at ``level``; on failure undo and return the prune reason."""
        p = self.problem
        u, v = self.edges[level]
        if p.gallai_constraint and self.builder.creates_rainbow(u, v, color):
            return "rainbow"
        self._assign(u, v, color)
        if self._hits_target(u, v, color):
            self._unassign(u, v)
            return "target"
        if p.color_symmetry and not first_occurrence_ok(self.builder.counts, color, self.below):
            self._unassign(u, v)
            return "symmetry"
        if p.vertex_symmetry and p.canonicity != "off" and u == v - 1:
            if not is_canonical(self.mat, v + 1, self.size_class, self.sigmas, self._cheap()):
                self._unassign(u, v)
                return "symmetry"
        return None

    def _leaf_ok(self) -> bool:
        if not self.problem.require_all_colors:
            return True
        return all(self.builder.counts[c] > 0 for c in self.palette)

    def _root_hit(self) -> bool:
        """In blob mode the inner color alone may already hold a target."""
        if not self.problem.blob_mode:
            return False
        return any(
            contains_target(self.xadj[c], self.full_mask, t)
            for c, t in enumerate(self.problem.per_color_targets)
        )

    def _witness(self) -> EdgeColoring:
        p = self.problem
        if not p.blob_mode:
            return self.builder.freeze()
        owner = [i for i, block in enumerate(self.members) for _ in block]
        return EdgeColoring.from_function(
            p.n, p.k,
            lambda x, y: p.inner_color if owner[x] == owner[y] else self.mat[owner[x]][owner[y]],
        )

    def _spend(self) -> bool:
        if self._allowance == 0:
            self._allowance = self.budget.take(BUDGET_CHUNK)
            if self._allowance == 0:
                return False
        self._allowance -= 1
        return True

    # -- Checkpoints ----------------------------------------------------------

    def snapshot(self, level: int, base: int, choice: list[int]) -> dict:
        return {
            "problem_hash": self.problem.problem_hash(),
            "base": base,
            "level": level,
            "assigned": [self.mat[u][v] for u, v in self.edges[:level]],
            "next": list(choice[: level + 1]),
            "stats": self.stats.to_dict(),
        }

    def _restore(self, state: dict) -> tuple[int, int, list[int]]:
        if state.get("problem_hash") != self.problem.problem_hash():
            raise CheckpointMismatch("checkpoint belongs to a different problem")
        for (u, v), color in zip(self.edges, state["assigned"]):
            self._assign(u, v, color)
        choice = [0] * (len(self.edges) + 1)
        for idx, value in enumerate(state["next"]):
            choice[idx] = value
        self.stats = SearchStats.from_dict(state.get("stats") or {})
        return int(state["level"]), int(state.get("base", 0)), choice

    def _save(self, level: int, base: int, choice: list[int]) -> None:
        if not (self.checkpoint_path and self.checkpoint_writer):
            return
        self.checkpoint_writer(self.checkpoint_path, self.snapshot(level, base, choice))
        if self.logger:
            self.logger.checkpoint(self.checkpoint_path, self.stats.nodes)

    # -- Search ---------------------------------------------------------------

    def _certificate(self, outcome: Outcome, started: float, witness: EdgeColoring | None = None,
                     resumed: str | None = None) -> Certificate:
        self.stats.wall_time += time.monotonic() - started
        return Certificate(self.problem, outcome, witness, self.stats, checkpoint_id=resumed)

    def run(self, prefix: list[int] | None = None, resume: dict | None = None) -> Certificate:
        """
        Search the subtree below ``prefix`` (colors of the first pairs), or
        continue from a checkpoint state.
        """
        started = time.monotonic()
        resumed = None
        edges = self.edges
        n_edges = len(edges)
        palette = self.palette

        if self._root_hit():
            return self._certificate(Outcome.EXHAUSTED, started)

        if resume is not None:
            level, base, choice = self._restore(resume)
            resumed = resume["problem_hash"]
        else:
            base = 0
            for idx, color in enumerate(prefix or []):
                reason = self._try(idx, color)
                if reason is not None:
                    self.stats.prunes[reason] += 1
                    return self._certificate(Outcome.EXHAUSTED, started)
                base = idx + 1
            level = base
            choice = [0] * (n_edges + 1)

        while True:
            if level == n_edges:
                if self._leaf_ok():
                    witness = self._witness()
                    assert witness_is_valid(self.problem, witness), "witness failed re-validation"
                    return self._certificate(Outcome.WITNESS, started, witness, resumed)
                self.stats.prunes["palette"] += 1
                if level == base:
                    return self._certificate(Outcome.EXHAUSTED, started, resumed=resumed)
                level -= 1
                self._unassign(*edges[level])
                continue

            if choice[level] >= len(palette):
                choice[level] = 0
                if level == base:
                    return self._certificate(Outcome.EXHAUSTED, started, resumed=resumed)
                level -= 1
                self._unassign(*edges[level])
                continue

            if not self._spend():
                self._save(level, base, choice)
                if self.logger:
                    self.logger.tagged("BUDGET", f"node budget spent at depth {level}", nodes=self.stats.nodes)
                return self._certificate(Outcome.BUDGET_EXCEEDED, started, resumed=resumed)

            nodes = self.stats.nodes = self.stats.nodes + 1
            if nodes & 1023 == 0 and self.stop_event is not None and self.stop_event.is_set():
                self.stopped = True
                return self._certificate(Outcome.BUDGET_EXCEEDED, started, resumed=resumed)
            if self.logger and self.progress_every and nodes % self.progress_every == 0:
                self.logger.progress(nodes, level, self.stats.prunes)
            if self.checkpoint_every and nodes % self.checkpoint_every == 0:
                self._save(level, base, choice)

            color = palette[choice[level]]
            choice[level] += 1
            reason = self._try(level, color)
            if reason is not None:
                self.stats.prunes[reason] += 1
                continue
            level += 1

    # -- Splitting and estimation ---------------------------------------------

    def frontier(self, depth: int) -> list[list[int]]:
        """Surviving color prefixes of the first ``depth`` pairs, in search order."""
        depth = min(depth, len(self.edges))
        out: list[list[int]] = []
        if self._root_hit():
            return out
        path: list[int] = []

        def walk(level: int) -> None:
            if level == depth:
                out.append(list(path))
                return
            for color in self.palette:
                self.stats.nodes += 1
                reason = self._try(level, color)
                if reason is not None:
                    self.stats.prunes[reason] += 1
                    continue
                path.append(color)
                walk(level + 1)
                path.pop()
                self._unassign(*self.edges[level])

        walk(0)
        return out

    def estimate(self, probes: int, rng: random.Random) -> float:
        """
        Random-probe estimate of the pruned tree size.

        Each probe walks one random root-to-leaf path; the products of the
        branching factors seen along it are an unbiased size estimate.
        """
        if self._root_hit() or probes <= 0:
            return 1.0
        total = 0.0
        for _ in range(probes):
            size, weight, level = 1.0, 1.0, 0
            while level < len(self.edges):
                children = []
                for color in self.palette:
                    if self._try(level, color) is None:
                        children.append(color)
                        self._unassign(*self.edges[level])
                if not children:
                    break
                weight *= len(children)
                size += weight
                self._try(level, rng.choice(children))
                level += 1
            for back in range(level - 1, -1, -1):
                self._unassign(*self.edges[back])
            total += size
        return total / probes
