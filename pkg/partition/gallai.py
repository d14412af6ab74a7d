"""
Rainbowless - Gallai Partitions
==================================
Every Gallai coloring with at least two vertices splits its vertex set
into at least two parts such that at most two colors appear between
parts and each pair of parts sees a single color.

Finder:
    For each candidate inter-part color set S (singletons first, then
    pairs in lexicographic order) the connected components of the graph
    of pairs colored outside S are blocks; blocks joined by more than one
    color are merged until every pair of blocks is uniform.  The first
    candidate leaving at least two blocks is returned.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from coloring.model import EdgeColoring, bits, iter_pairs, find_rainbow_triangle
from core.errors import InvalidPartition, NotGallai, TooSmall


@dataclass
class GallaiPartition:
    """
    A vertex partition with its reduced coloring.

    Attributes:
        parts:          Disjoint vertex tuples covering [0, n), each sorted.
        reduced_colors: The color ids appearing between parts, sorted.
        pair_color:     (i, j) with i < j -> the color between parts i and j.
    """

    parts: list[tuple[int, ...]]
    reduced_colors: tuple[int, ...]
    pair_color: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_parts(cls, c: EdgeColoring, parts: Iterable[Iterable[int]]) -> "GallaiPartition":
        """Read the pair colors off representatives; no validation."""
        ordered = sorted((tuple(sorted(p)) for p in parts), key=lambda p: p[0] if p else -1)
        pair_color = {}
        for i, j in iter_pairs(len(ordered)):
            if ordered[i] and ordered[j]:
                pair_color[(i, j)] = c.color(ordered[i][0], ordered[j][0])
        return cls(ordered, tuple(sorted(set(pair_color.values()))), pair_color)

    def between(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.pair_color[(i, j)]

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def owner(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}

    def largest(self) -> int:
        return max(self.sizes(), default=0)

    def to_dict(self) -> dict:
        return {
            "parts": [list(p) for p in self.parts],
            "reduced_colors": list(self.reduced_colors),
        }


@dataclass
class PartitionCheck:
    """
    Result of validate_partition; truthy when valid.

    Attributes:
        ok:     All invariants hold.
        reason: First violated invariant, empty when ok.
        pair:   Offending vertex pair, if the violation is on a pair.
        part:   Offending part index, if the violation is on a part.
    """

    ok: bool
    reason: str = ""
    pair: tuple[int, int] | None = None
    part: int | None = None

    def __bool__(self) -> bool:
        return self.ok


# =============================================================================
# Validation
# =============================================================================

def validate_partition(c: EdgeColoring, p: GallaiPartition) -> PartitionCheck:
    """Check every partition invariant against ``c``; report the first failure."""
    if len(p.parts) < 2:
        return PartitionCheck(False, "fewer than two parts")
    seen: set[int] = set()
    for idx, part in enumerate(p.parts):
        if not part:
            return PartitionCheck(False, "empty part", part=idx)
        for v in part:
            if not 0 <= v < c.n:
                return PartitionCheck(False, f"vertex {v} outside [0, {c.n})", part=idx)
            if v in seen:
                return PartitionCheck(False, f"vertex {v} in two parts", part=idx)
            seen.add(v)
    if len(seen) != c.n:
        missing = min(set(range(c.n)) - seen)
        return PartitionCheck(False, f"vertex {missing} in no part")
    if len(p.reduced_colors) > 2:
        return PartitionCheck(False, f"{len(p.reduced_colors)} colors between parts")

    masks = [sum(1 << v for v in part) for part in p.parts]
    for i, j in iter_pairs(len(p.parts)):
        expected = p.pair_color.get((i, j))
        if expected is None:
            return PartitionCheck(False, f"no color recorded for parts ({i}, {j})")
        if expected not in p.reduced_colors:
            return PartitionCheck(False, f"color {expected} not among reduced colors")
        adj = c.adjacency(expected)
        for u in p.parts[i]:
            off = masks[j] & ~adj[u]
            if off:
                w = next(bits(off))
                return PartitionCheck(False, "non-uniform pair between parts", pair=(u, w))
    return PartitionCheck(True)


def reduced_graph(c: EdgeColoring, p: GallaiPartition) -> EdgeColoring:
    """
    The 2-colored coloring on the parts.

    Raises:
        InvalidPartition: ``p`` fails validation against ``c``.
    """
    check = validate_partition(c, p)
    if not check:
        raise InvalidPartition(check.reason, check)
    r = EdgeColoring(len(p.parts), c.k, [p.between(i, j) for i, j in iter_pairs(len(p.parts))])
    assert len(r.used_colors()) <= 2, "reduced graph with more than two colors"
    return r


# =============================================================================
# Finder
# =============================================================================

def _uniform_color(c: EdgeColoring, a: Sequence[int], b_mask: int, allowed: set[int]) -> int | None:
    col = c.color(a[0], next(bits(b_mask)))
    if col not in allowed:
        return None
    adj = c.adjacency(col)
    for u in a:
        if b_mask & ~adj[u]:
            return None
    return col


def _blocks_for(c: EdgeColoring, allowed: set[int]) -> list[list[int]] | None:
    aux = nx.Graph()
    aux.add_nodes_from(range(c.n))
    aux.add_edges_from((u, v) for u, v, col in c.pairs() if col not in allowed)
    blocks = [sorted(comp) for comp in nx.connected_components(aux)]

    merged = True
    while merged and len(blocks) > 1:
        merged = False
        masks = [sum(1 << v for v in b) for b in blocks]
        for i, j in iter_pairs(len(blocks)):
            if _uniform_color(c, blocks[i], masks[j], allowed) is None:
                blocks[i] = sorted(blocks[i] + blocks[j])
                del blocks[j]
                merged = True
                break
    return blocks if len(blocks) >= 2 else None


def _candidate_sets(colors: Sequence[int]) -> list[tuple[int, ...]]:
    return [(col,) for col in colors] + list(combinations(colors, 2))


def find_gallai_partition(c: EdgeColoring) -> GallaiPartition:
    """
    A valid Gallai partition of ``c``.

    Raises:
        TooSmall:  n < 2.
        NotGallai: ``c`` has a rainbow triangle.
    """
    if c.n < 2:
        raise TooSmall(f"a Gallai partition needs n >= 2, got {c.n}")
    triangle = find_rainbow_triangle(c)
    if triangle is not None:
        raise NotGallai(triangle)

    for allowed in _candidate_sets(c.used_colors()):
        blocks = _blocks_for(c, set(allowed))
        if blocks is None:
            continue
        p = GallaiPartition.from_parts(c, blocks)
        if validate_partition(c, p):
            return p
    # Unreachable for Gallai colorings
    raise NotGallai((-1, -1, -1))


def refine_partition(c: EdgeColoring, p: GallaiPartition) -> GallaiPartition:
    """
    Split parts while the colors between parts stay within two.

    Each part of order >= 2 is replaced by a Gallai partition of its
    induced coloring whose inter-part colors fit the current palette.
    Repeats until no part splits.
    """
    parts = [list(part) for part in p.parts]
    palette = set(p.reduced_colors)
    changed = True
    while changed:
        changed = False
        for idx, part in enumerate(parts):
            if len(part) < 2:
                continue
            sub = c.induced(part)
            used = sub.used_colors()
            options = _candidate_sets(used) if len(palette) < 2 else [
                s for s in _candidate_sets(used) if set(s) <= palette
            ]
            for allowed in options:
                if len(palette | set(allowed)) > 2:
                    continue
                blocks = _blocks_for(sub, set(allowed))
                if blocks is None:
                    continue
                palette |= set(GallaiPartition.from_parts(sub, blocks).reduced_colors)
                parts[idx:idx + 1] = [[part[v] for v in block] for block in blocks]
                changed = True
                break
            if changed:
                break
    refined = GallaiPartition.from_parts(c, parts)
    check = validate_partition(c, refined)
    if not check:
        raise InvalidPartition(check.reason, check)
    return refined
