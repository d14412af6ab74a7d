"""
Rainbowless - Substitution (Blow-up)
=======================================
Replace every vertex of an outer coloring by an inner coloring.  This is
the inverse of taking a Gallai partition: the blobs become the parts and
the outer coloring becomes the reduced graph.
"""

from typing import Sequence

from core.errors import ArityMismatch, ColorOutOfRange
from coloring.model import EdgeColoring, iter_pairs


def substitute(
    outer: EdgeColoring,
    inners: Sequence[EdgeColoring],
    inner_color_offsets: Sequence[int | Sequence[int]] | None = None,
) -> EdgeColoring:
    """
    Blow up ``outer`` by ``inners``.

    Vertex i of ``outer`` becomes the consecutive block of vertices that
    hosts ``inners[i]``.  Pairs between blocks take the outer pair's color;
    pairs inside block i take inners[i]'s color after relabeling.

    Args:
        outer:               Coloring on the blocks.
        inners:              One coloring per outer vertex.
        inner_color_offsets: Per-inner relabeling; an int shifts every color,
                             a sequence maps color j to entry j.  Defaults to
                             no relabeling.

    Raises:
        ArityMismatch:   len(inners) != outer.n, or offsets of the wrong length.
        ColorOutOfRange: A relabeling produces a negative color or misses one.
    """
    if len(inners) != outer.n:
        raise ArityMismatch(f"outer has {outer.n} vertices but {len(inners)} inners were given")
    if inner_color_offsets is None:
        inner_color_offsets = [0] * len(inners)
    if len(inner_color_offsets) != len(inners):
        raise ArityMismatch("one color relabeling per inner coloring is required")

    maps: list[list[int]] = []
    for inner, relabel in zip(inners, inner_color_offsets):
        if isinstance(relabel, int):
            mapping = [c + relabel for c in range(inner.k)]
        else:
            mapping = list(relabel)
            if len(mapping) < inner.k:
                raise ColorOutOfRange(len(mapping), inner.k)
        if any(c < 0 for c in mapping):
            raise ColorOutOfRange(min(mapping), inner.k)
        maps.append(mapping)

    k = max([outer.k] + [max(m, default=0) + 1 for m in maps])
    starts = blob_starts([inner.n for inner in inners])
    owner = [i for i, inner in enumerate(inners) for _ in range(inner.n)]
    total = len(owner)

    def pair_color(x: int, y: int) -> int:
        bx, by = owner[x], owner[y]
        if bx != by:
            return outer.color(bx, by)
        return maps[bx][inners[bx].color(x - starts[bx], y - starts[bx])]

    return EdgeColoring(total, k, [pair_color(x, y) for x, y in iter_pairs(total)])


def blob_starts(sizes: Sequence[int]) -> list[int]:
    starts, acc = [], 0
    for size in sizes:
        starts.append(acc)
        acc += size
    return starts


def blob_ranges(sizes: Sequence[int]) -> list[list[int]]:
    """Vertex lists of each block in a blow-up with the given block orders."""
    return [list(range(s, s + size)) for s, size in zip(blob_starts(sizes), sizes)]


def contract(c: EdgeColoring, blobs: Sequence[Sequence[int]]) -> EdgeColoring:
    """
    Collapse each blob to one vertex, reading the color of the first pair
    between blobs.  Exact inverse of ``substitute`` on inter-blob pairs.
    """
    reps = [blob[0] for blob in blobs]
    return EdgeColoring(
        len(reps), c.k,
        [c.color(reps[i], reps[j]) for i, j in iter_pairs(len(reps))],
    )
