"""
Rainbowless - Reduction to Three Colors
==========================================
Turns a Gallai coloring into either a monochromatic K_{a,b} or a
3-colored coloring G' whose Gallai partition has only parts of order at
most a - 1, where a = s(H) and b = |H| - a.

Steps:
    1. Grow T = v_1, v_2, ... greedily (lowest vertex id first).  v_i
       joins when all its edges to the vertices not yet in T, except at
       most a - 1, share one color; every exceptional edge must go to a
       vertex that joins T within the next a - 1 positions.  Branches
       that cannot honour those deadlines are rolled back.
    2. As soon as a members of T share their color and enough remainder
       vertices see all of them in it, return the K_{a,b}.
    3. Partition the remainder, refine it, and return to G' every T
       vertex whose edges to the remainder all carry one of the two
       partition colors (as a singleton part).
    4. Recolor within-part pairs with a third color.
"""

from dataclasses import dataclass, field

from coloring.model import EdgeColoring, bits, iter_pairs, find_rainbow_triangle
from coloring.targets import TargetGraph
from core.errors import NotGallai, ReductionStalled, TooSmallRemainder
from core.logger import RunLogger
from detectors.witness import MonoWitness, validate_witness
from partition.gallai import GallaiPartition, find_gallai_partition, refine_partition

THIRD_COLOR = 2


@dataclass
class Reduced:
    """
    The 3-colored outcome.

    Attributes:
        g_prime:    Coloring on the kept vertices; colors 0/1 between parts, 2 inside.
        partition:  Gallai partition of g_prime, every part of order <= a - 1.
        t_set:      Extracted vertices in extraction order (original ids).
        vertex_map: vertex_map[i] is the original id of g_prime's vertex i.
        reinserted: T vertices returned to g_prime as singleton parts.
        size_floor: n - (a-1)k - 2(a-1).
        palette:    Original ids of the two partition colors.
    """

    g_prime: EdgeColoring
    partition: GallaiPartition
    t_set: list[int]
    vertex_map: list[int]
    reinserted: list[int] = field(default_factory=list)
    size_floor: int = 0
    palette: tuple[int, int] = (0, 1)

    @property
    def floor_met(self) -> bool:
        return self.g_prime.n >= self.size_floor


ReductionOutcome = MonoWitness | Reduced


class _Found(Exception):
    def __init__(self, witness: MonoWitness):
        self.witness = witness


class _TSetGrower:
    """
    Depth-first growth of T with deadline bookkeeping.

    ``deadlines[u] = q`` means u must occupy T position q or earlier.
    """

    def __init__(self, c: EdgeColoring, target: TargetGraph, max_steps: int):
        self.c = c
        self.target = target
        self.a = target.s_value
        self.b = target.order - self.a
        self.max_steps = max_steps
        self.steps = 0
        self.order: list[int] = []
        self.colors: list[int] = []
        self.rollbacks = 0

    def _qualify(self, v: int, remaining: int, deadlines: dict[int, int]) -> tuple[int, int] | None:
        rest = remaining & ~(1 << v)
        best_color, best_count = 0, -1
        for col in range(self.c.k):
            cnt = (self.c.neighbors(v, col) & rest).bit_count()
            if cnt > best_count:
                best_color, best_count = col, cnt
        exceptions = rest & ~self.c.neighbors(v, best_color)
        if exceptions.bit_count() > self.a - 1:
            return None
        p = len(self.order)
        merged = {u: d for u, d in deadlines.items() if u != v}
        for u in bits(exceptions):
            merged[u] = min(merged.get(u, p + self.a - 1), p + self.a - 1)
        for rank, d in enumerate(sorted(merged.values()), start=1):
            if d < p + rank:
                return None
        return best_color, exceptions

    def _check_witness(self, remaining: int) -> None:
        if self.b > remaining.bit_count():
            return
        for col in set(self.colors):
            members = [v for v, cv in zip(self.order, self.colors) if cv == col]
            if len(members) < self.a:
                continue
            side_a = members[: self.a]
            common = remaining
            for v in side_a:
                common &= self.c.neighbors(v, col)
            if common.bit_count() >= self.b:
                side_b = tuple(list(bits(common))[: self.b])
                w = MonoWitness(col, TargetGraph.complete_bipartite(self.a, self.b), (tuple(side_a), side_b))
                if validate_witness(self.c, w):
                    raise _Found(w)

    def grow(self, remaining: int, deadlines: dict[int, int]) -> bool:
        """Extend T as far as possible; False when pending deadlines cannot be met."""
        p = len(self.order)
        forced = [u for u, d in deadlines.items() if d == p]
        if len(forced) > 1:
            return False
        candidates = forced or list(bits(remaining))
        for v in candidates:
            if self.steps >= self.max_steps:
                break
            self.steps += 1
            q = self._qualify(v, remaining, deadlines)
            if q is None:
                continue
            color, exceptions = q
            nxt = {u: d for u, d in deadlines.items() if u != v}
            for u in bits(exceptions):
                nxt[u] = min(nxt.get(u, p + self.a - 1), p + self.a - 1)
            self.order.append(v)
            self.colors.append(color)
            self._check_witness(remaining & ~(1 << v))
            if self.grow(remaining & ~(1 << v), nxt):
                return True
            self.order.pop()
            self.colors.pop()
            self.rollbacks += 1
        return not deadlines


def extract_reduction(
    c: EdgeColoring,
    H: TargetGraph,
    R: int,
    logger: RunLogger | None = None,
    max_steps: int = 200_000,
) -> ReductionOutcome:
    """
    Reduce ``c`` with respect to bipartite ``H``.

    Args:
        c:         A Gallai coloring.
        H:         Bipartite target; a = s(H), b = |H| - a.
        R:         The Ramsey bound the run is checked against (recorded).
        logger:    Optional run logger.
        max_steps: Cap on T-growth branching before settling for the
                   current T.

    Raises:
        NotGallai:         ``c`` has a rainbow triangle.
        TooSmallRemainder: Fewer than two vertices remain outside T, or fewer
                           than n - (a-1)k - 2(a-1) are kept.
        ReductionStalled:  A remainder part keeps order > a - 1.
    """
    if R < 2:
        raise ValueError(f"R must be at least 2, got {R}")
    triangle = find_rainbow_triangle(c)
    if triangle is not None:
        raise NotGallai(triangle)

    grower = _TSetGrower(c, H, max_steps)
    a = grower.a
    try:
        grower.grow((1 << c.n) - 1, {})
    except _Found as found:
        if logger:
            logger.tagged("WITNESS", f"mono K{a},{grower.b} in color {found.witness.color} while growing T",
                          t_size=len(grower.order))
        return found.witness

    t_set = list(grower.order)
    in_t = set(t_set)
    remainder = [v for v in range(c.n) if v not in in_t]
    if len(remainder) < 2:
        raise TooSmallRemainder(remainder, t_set)

    sub = c.induced(remainder)
    p = refine_partition(sub, find_gallai_partition(sub))
    cap = max(a - 1, 1)
    for part in p.parts:
        if len(part) > cap:
            raise ReductionStalled([remainder[v] for v in part], cap)

    palette = list(p.reduced_colors)
    col = 0
    while len(palette) < 2:
        if col not in palette:
            palette.append(col)
        col += 1
    red, blue = sorted(palette)

    parts = [[remainder[v] for v in part] for part in p.parts]
    reinserted: list[int] = []
    for v in t_set:
        colors_out = {c.color(v, u) for u in remainder}
        if len(colors_out) != 1 or next(iter(colors_out)) not in (red, blue):
            continue
        if any(c.color(v, w) not in (red, blue) for w in reinserted):
            continue
        reinserted.append(v)
        parts.append([v])

    size_floor = c.n - (a - 1) * c.k - 2 * (a - 1)
    kept = len(remainder) + len(reinserted)
    if kept < size_floor:
        raise TooSmallRemainder(remainder, t_set, floor=size_floor)

    vertex_map = sorted(v for part in parts for v in part)
    index = {v: i for i, v in enumerate(vertex_map)}
    owner = {v: i for i, part in enumerate(parts) for v in part}
    relabel = {red: 0, blue: 1}

    def new_color(x: int, y: int) -> int:
        u, v = vertex_map[x], vertex_map[y]
        if owner[u] == owner[v]:
            return THIRD_COLOR
        return relabel[c.color(u, v)]

    g_prime = EdgeColoring(
        len(vertex_map), 3,
        [new_color(x, y) for x, y in iter_pairs(len(vertex_map))],
    )
    partition = GallaiPartition.from_parts(g_prime, [[index[v] for v in part] for part in parts])

    if logger:
        logger.tagged(
            "DONE",
            f"reduced to {g_prime.n} vertices, |T|={len(t_set)}, {len(reinserted)} re-inserted",
            parts=len(partition.parts), floor=size_floor, R=R, rollbacks=grower.rollbacks,
        )
    return Reduced(g_prime, partition, t_set, vertex_map, reinserted, size_floor, (red, blue))
