"""
Rainbowless - Edge-Colored Complete Graphs
=============================================
The universal object: a k-edge-coloring of K_n.

Colors are stored in a flat upper-triangular tuple indexed by
``pair_index(n, u, v)`` for u < v (the same order as the canonical file
format).  Per-color adjacency is kept as one int bitset per vertex, so
common-neighborhood queries are a single ``&``.

``EdgeColoring`` is immutable and safe to share between threads.
``ColoringBuilder`` is the mutable, single-owner counterpart used by the
search engine (assign / unassign on backtrack).
"""

from typing import Callable, Iterator, Mapping, Sequence

import networkx as nx

from core.errors import ColorOutOfRange, MissingPair, TooLarge

MAX_VERTICES = 64


def pair_index(n: int, u: int, v: int) -> int:
    """Position of pair {u, v} in the flat upper-triangular layout."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Pairs in canonical row-major order: (0,1), (0,2), ..., (n-2,n-1)."""
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class EdgeColoring:
    """
    An immutable coloring of every pair of K_n with a color in [0, k).

    Attributes:
        n: Vertex count.
        k: Number of color slots (not all need to be used).
    """

    __slots__ = ("n", "k", "_colors", "_adj")

    def __init__(self, n: int, k: int, colors: Sequence[int]):
        if n < 1:
            raise ValueError("a coloring needs at least one vertex")
        if n > MAX_VERTICES:
            raise TooLarge(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
        if k < 1:
            raise ValueError("a coloring needs at least one color slot")
        expected = n * (n - 1) // 2
        if len(colors) != expected:
            raise ValueError(f"expected {expected} pair colors, got {len(colors)}")
        self.n = n
        self.k = k
        self._colors = tuple(colors)

        adj = [[0] * n for _ in range(k)]
        idx = 0
        for u in range(n):
            for v in range(u + 1, n):
                c = self._colors[idx]
                if not 0 <= c < k:
                    raise ColorOutOfRange(c, k, (u, v))
                adj[c][u] |= 1 << v
                adj[c][v] |= 1 << u
                idx += 1
        self._adj = tuple(tuple(row) for row in adj)

    # -- Construction helpers -------------------------------------------------

    @classmethod
    def from_function(cls, n: int, k: int, fn: Callable[[int, int], int]) -> "EdgeColoring":
        return cls(n, k, [fn(u, v) for u, v in iter_pairs(n)])

    @classmethod
    def monochromatic(cls, n: int, color: int = 0, k: int | None = None) -> "EdgeColoring":
        return cls(n, k if k is not None else color + 1, [color] * (n * (n - 1) // 2))

    # -- Queries --------------------------------------------------------------

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("a vertex has no color with itself")
        return self._colors[pair_index(self.n, u, v)]

    @property
    def colors(self) -> tuple[int, ...]:
        return self._colors

    def adjacency(self, color: int) -> tuple[int, ...]:
        """Bitset neighborhoods of the color class, one int per vertex."""
        if not 0 <= color < self.k:
            raise ColorOutOfRange(color, self.k)
        return self._adj[color]

    def neighbors(self, v: int, color: int) -> int:
        return self._adj[color][v]

    def degree(self, v: int, color: int) -> int:
        return self._adj[color][v].bit_count()

    def edge_count(self, color: int) -> int:
        return sum(row.bit_count() for row in self.adjacency(color)) // 2

    def used_colors(self) -> list[int]:
        return sorted(set(self._colors))

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        idx = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                yield u, v, self._colors[idx]
                idx += 1

    def induced(self, vertices: Sequence[int]) -> "EdgeColoring":
        """Sub-coloring on ``vertices``, relabeled 0..len-1 in the given order."""
        m = len(vertices)
        return EdgeColoring(
            m, self.k,
            [self.color(vertices[i], vertices[j]) for i, j in iter_pairs(m)],
        )

    def recolor(self, mapping: Mapping[int, int] | Sequence[int], k: int | None = None) -> "EdgeColoring":
        """Apply a color relabeling; ``k`` defaults to max image + 1."""
        lookup = mapping if isinstance(mapping, Mapping) else dict(enumerate(mapping))
        new = [lookup[c] for c in self._colors]
        new_k = k if k is not None else max(new, default=0) + 1
        return EdgeColoring(self.n, new_k, new)

    def with_k(self, k: int) -> "EdgeColoring":
        return EdgeColoring(self.n, k, self._colors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self._colors == other._colors

    def __hash__(self) -> int:
        return hash((self.n, self.k, self._colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, k={self.k}, used={self.used_colors()})"


# =============================================================================
# Operations
# =============================================================================

def new_coloring(
    n: int,
    k: int,
    assignments: Mapping[tuple[int, int] | frozenset, int],
) -> EdgeColoring:
    """
    Build a validated coloring from a pair -> color map.

    Keys may be ordered tuples in either orientation or frozensets.

    Raises:
        MissingPair:     Some pair of K_n has no color.
        ColorOutOfRange: A color id is outside [0, k).
    """
    normalized: dict[tuple[int, int], int] = {}
    for key, color in assignments.items():
        u, v = sorted(key)
        if not (0 <= u < v < n):
            raise ValueError(f"pair {tuple(key)} is not a pair of distinct vertices below {n}")
        if not 0 <= color < k:
            raise ColorOutOfRange(color, k, (u, v))
        normalized[(u, v)] = color

    colors = []
    for u, v in iter_pairs(n):
        if (u, v) not in normalized:
            raise MissingPair(u, v)
        colors.append(normalized[(u, v)])
    return EdgeColoring(n, k, colors)


def palette_full(c: EdgeColoring) -> bool:
    """True when every one of the k color slots is used."""
    return len(set(c.colors)) == c.k


def find_rainbow_triangle(c: EdgeColoring) -> tuple[int, int, int] | None:
    """
    Return some triangle with three distinct colors, or None if c is Gallai.

    Edges are scanned color class by color class, smallest class first;
    the third vertex comes out of one bitset expression per color.
    """
    used = c.used_colors()
    if len(used) < 3:
        return None
    order = sorted(used, key=lambda col: (c.edge_count(col), col))
    for col in order:
        adj_c = c.adjacency(col)
        for u in range(c.n):
            for v in bits(adj_c[u] >> (u + 1) << (u + 1)):
                for a in used:
                    if a == col:
                        continue
                    adj_a = c.adjacency(a)
                    cand = adj_a[u] & ~adj_a[v] & ~adj_c[v] & ~(1 << v)
                    if cand:
                        w = (cand & -cand).bit_length() - 1
                        return tuple(sorted((u, v, w)))
    return None


def color_class(c: EdgeColoring, color: int) -> nx.Graph:
    """The simple graph on n vertices formed by the pairs colored ``color``."""
    adj = c.adjacency(color)
    g = nx.Graph()
    g.add_nodes_from(range(c.n))
    g.add_edges_from((u, v) for u in range(c.n) for v in bits(adj[u]) if u < v)
    return g


# =============================================================================
# Mutable Builder
# =============================================================================

class ColoringBuilder:
    """
    A partial coloring owned by one thread.

    Unassigned pairs have color -1.  ``seen[v]`` is the bitset of vertices
    whose pair with v is assigned, so incremental checks only look at
    completed triangles.
    """

    __slots__ = ("n", "k", "colors", "adj", "seen", "counts")

    def __init__(self, n: int, k: int):
        if n > MAX_VERTICES:
            raise TooLarge(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
        self.n = n
        self.k = k
        self.colors = [-1] * (n * (n - 1) // 2)
        self.adj = [[0] * n for _ in range(k)]
        self.seen = [0] * n
        self.counts = [0] * k

    @classmethod
    def from_coloring(cls, c: EdgeColoring, k: int | None = None) -> "ColoringBuilder":
        b = cls(c.n, k if k is not None else c.k)
        for u, v, col in c.pairs():
            b.assign(u, v, col)
        return b

    def color(self, u: int, v: int) -> int:
        return self.colors[pair_index(self.n, u, v)]

    def assign(self, u: int, v: int, color: int) -> None:
        self.colors[pair_index(self.n, u, v)] = color
        self.adj[color][u] |= 1 << v
        self.adj[color][v] |= 1 << u
        self.seen[u] |= 1 << v
        self.seen[v] |= 1 << u
        self.counts[color] += 1

    def unassign(self, u: int, v: int) -> None:
        idx = pair_index(self.n, u, v)
        color = self.colors[idx]
        if color < 0:
            return
        self.colors[idx] = -1
        self.adj[color][u] &= ~(1 << v)
        self.adj[color][v] &= ~(1 << u)
        self.seen[u] &= ~(1 << v)
        self.seen[v] &= ~(1 << u)
        self.counts[color] -= 1

    def creates_rainbow(self, u: int, v: int, color: int) -> bool:
        """
        Would coloring {u, v} with ``color`` close a rainbow triangle
        with already-assigned pairs?  O(k) bitset operations.
        """
        common = self.seen[u] & self.seen[v]
        if not common:
            return False
        adj = self.adj
        same_v = adj[color][v]
        for a in range(self.k):
            if a == color:
                continue
            if adj[a][u] & common & ~adj[a][v] & ~same_v:
                return True
        return False

    def used_count(self) -> int:
        return sum(1 for x in self.counts if x)

    def freeze(self) -> EdgeColoring:
        if any(col < 0 for col in self.colors):
            idx = self.colors.index(-1)
            for u, v in iter_pairs(self.n):
                if pair_index(self.n, u, v) == idx:
                    raise MissingPair(u, v)
        return EdgeColoring(self.n, self.k, self.colors)
