"""
Rainbowless - Bitset Detection Kernels
=========================================
Exact containment tests on a graph given as bitset neighborhoods
(``adj[v]`` is an int whose bit w is set when vw is an edge) restricted
to a vertex mask.

Two flavours per target:
    find_*     -- return an embedding or None (used by the public detectors)
    *_through  -- does some copy use the edge xy?  (the search engine's
                  incremental check: a copy that avoids xy was already
                  present before xy was colored and would have been pruned)
"""

from itertools import combinations
from typing import Sequence

from coloring.model import bits


def _full(n: int) -> int:
    return (1 << n) - 1


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _drop_isolated(adj: Sequence[int], mask: int) -> int:
    keep = 0
    for v in bits(mask):
        if adj[v] & mask:
            keep |= 1 << v
    return keep


# =============================================================================
# Complete bipartite K_{l,m}
# =============================================================================

def find_complete_bipartite(
    adj: Sequence[int], n: int, l: int, m: int, mask: int | None = None,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """
    An l-set whose common neighborhood has at least m vertices.

    l-subsets are enumerated lexicographically over vertices of degree
    >= m; the running intersection is abandoned as soon as it drops
    below m.
    """
    mask = _full(n) if mask is None else mask
    cand = [v for v in bits(mask) if (adj[v] & mask).bit_count() >= m]
    if len(cand) < l:
        return None
    for side in combinations(cand, l):
        common = mask
        for v in side:
            common &= adj[v]
            if common.bit_count() < m:
                break
        else:
            return side, tuple(list(bits(common))[:m])
    return None


def complete_bipartite_through(adj: Sequence[int], x: int, y: int, l: int, m: int) -> bool:
    """Expects xy to be present in ``adj``."""
    for a, b in ((x, y), (y, x)):
        # a on the l-side, b in the common neighborhood
        base = adj[a]
        if base.bit_count() < m:
            continue
        others = [v for v in bits(adj[b] & ~(1 << a)) if adj[v].bit_count() >= m]
        if len(others) < l - 1:
            continue
        for rest in combinations(others, l - 1):
            common = base
            for v in rest:
                common &= adj[v]
                if common.bit_count() < m:
                    break
            else:
                return True
    return False


# =============================================================================
# Matchings tP2
# =============================================================================

def find_matching(
    adj: Sequence[int], mask: int, t: int, memo: dict | None = None,
) -> list[tuple[int, int]] | None:
    """t disjoint edges inside ``mask`` or None; exact, memoized on the mask."""
    if t <= 0:
        return []
    memo = {} if memo is None else memo
    mask = _drop_isolated(adj, mask)
    if mask.bit_count() < 2 * t:
        return None
    key = (mask, t)
    if key in memo:
        return None
    v = _lowest(mask)
    rest = mask & ~(1 << v)
    for w in bits(adj[v] & rest):
        sub = find_matching(adj, rest & ~(1 << w), t - 1, memo)
        if sub is not None:
            return [(v, w), *sub]
    sub = find_matching(adj, rest, t, memo)
    if sub is not None:
        return sub
    memo[key] = False
    return None


def matching_through(adj: Sequence[int], x: int, y: int, t: int, n: int) -> bool:
    rest = _full(n) & ~(1 << x) & ~(1 << y)
    return find_matching(adj, rest, t - 1) is not None


# =============================================================================
# Linear forests tP3
# =============================================================================

def find_p3_packing(
    adj: Sequence[int], mask: int, t: int, memo: set | None = None,
) -> list[tuple[int, int, int]] | None:
    """
    t vertex-disjoint paths on three vertices, each as (leaf, center, leaf).

    Branches on the lowest vertex v with a neighbor: v as a center, v as a
    leaf of some center, or v unused.  Failed (mask, t) states are cached.
    """
    if t <= 0:
        return []
    memo = set() if memo is None else memo
    mask = _drop_isolated(adj, mask)
    if mask.bit_count() < 3 * t:
        return None
    key = (mask, t)
    if key in memo:
        return None
    v = _lowest(mask)
    rest = mask & ~(1 << v)
    nv = adj[v] & rest

    for a, b in combinations(list(bits(nv)), 2):
        sub = find_p3_packing(adj, rest & ~(1 << a) & ~(1 << b), t - 1, memo)
        if sub is not None:
            return [(a, v, b), *sub]
    for center in bits(nv):
        for w in bits(adj[center] & rest & ~(1 << center)):
            sub = find_p3_packing(adj, rest & ~(1 << center) & ~(1 << w), t - 1, memo)
            if sub is not None:
                return [(v, center, w), *sub]
    sub = find_p3_packing(adj, rest, t, memo)
    if sub is not None:
        return sub
    memo.add(key)
    return None


def p3_forest_through(adj: Sequence[int], x: int, y: int, t: int, n: int) -> bool:
    full = _full(n)
    for center, leaf in ((x, y), (y, x)):
        for z in bits(adj[center] & ~(1 << leaf)):
            rest = full & ~(1 << x) & ~(1 << y) & ~(1 << z)
            if find_p3_packing(adj, rest, t - 1) is not None:
                return True
    return False


# =============================================================================
# Stars and cliques
# =============================================================================

def find_star(adj: Sequence[int], mask: int, t: int) -> tuple[int, tuple[int, ...]] | None:
    for v in bits(mask):
        nb = adj[v] & mask
        if nb.bit_count() >= t:
            return v, tuple(list(bits(nb))[:t])
    return None


def star_through(adj: Sequence[int], x: int, y: int, t: int) -> bool:
    return adj[x].bit_count() >= t or adj[y].bit_count() >= t


def find_clique(adj: Sequence[int], mask: int, p: int) -> list[int] | None:
    if p <= 0:
        return []
    if mask.bit_count() < p:
        return None
    for v in bits(mask):
        higher = mask & adj[v] & ~((1 << (v + 1)) - 1)
        sub = find_clique(adj, higher, p - 1)
        if sub is not None:
            return [v, *sub]
    return None


def clique_through(adj: Sequence[int], x: int, y: int, p: int) -> bool:
    if p <= 2:
        return True
    return find_clique(adj, adj[x] & adj[y], p - 2) is not None
