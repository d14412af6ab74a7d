"""
Rainbowless - Symmetry Breaking
==================================
Isomorph rejection for the vertex-by-vertex search.

Pairs are assigned column by column: (0,1), (0,2), (1,2), (0,3), ...
so the colors on vertices 0..v form a prefix of the code of 0..v+1.
A partial coloring is kept only if its code is lexicographically minimal
among its images under the enabled group (vertex permutations that
preserve part orders, combined with permutations of interchangeable
colors).  Minimality is hereditary along this order, so rejecting any
non-minimal prefix never loses a class; testing only some group
elements merely prunes less.
"""

from itertools import permutations
from typing import Sequence

from coloring.targets import TargetGraph

STEP_LIMIT = 20_000


def color_classes(targets: Sequence[TargetGraph], palette: Sequence[int]) -> list[list[int]]:
    """Group palette colors whose targets are equal, in palette order."""
    groups: dict[TargetGraph, list[int]] = {}
    for color in palette:
        groups.setdefault(targets[color], []).append(color)
    return list(groups.values())


def color_maps(classes: Sequence[Sequence[int]], k: int) -> list[list[int]]:
    """All color relabelings permuting within classes; identity first."""
    maps: list[list[int]] = [list(range(k))]
    for cls in classes:
        if len(cls) < 2:
            continue
        extended = []
        for base in maps:
            for perm in permutations(cls):
                m = list(base)
                for src, dst in zip(cls, perm):
                    m[src] = dst
                extended.append(m)
        maps = extended
    identity = list(range(k))
    return [identity] + [m for m in maps if m != identity]


def class_lookup(classes: Sequence[Sequence[int]], k: int) -> list[list[int]]:
    """For each color, the interchangeable colors below it."""
    below: list[list[int]] = [[] for _ in range(k)]
    for cls in classes:
        for i, color in enumerate(cls):
            below[color] = list(cls[:i])
    return below


def first_occurrence_ok(counts: Sequence[int], color: int, below: Sequence[Sequence[int]]) -> bool:
    """Interchangeable colors must first appear in increasing order."""
    return all(counts[c] > 0 for c in below[color])


def _code(mat: Sequence[Sequence[int]], m: int) -> list[int]:
    return [mat[i][j] for j in range(1, m) for i in range(j)]


def _smaller_image(
    mat: Sequence[Sequence[int]],
    m: int,
    size_class: Sequence[int],
    sigma: Sequence[int],
    base: Sequence[int],
    step_limit: int = STEP_LIMIT,
) -> bool:
    """
    Is there a vertex permutation whose sigma-image has a smaller code?

    Gives up (answering no) after ``step_limit`` placements, which keeps
    highly symmetric prefixes from exploring their whole automorphism group.
    """
    pre: list[int] = []
    used = [False] * m
    steps = [0]

    def extend(j: int) -> int:
        # -1: image smaller, 1: image larger, 0: equal so far
        if j == m:
            return 0
        if steps[0] >= step_limit:
            return 1
        steps[0] += 1
        offset = j * (j - 1) // 2
        for u in range(m):
            if used[u] or size_class[u] != size_class[j]:
                continue
            verdict = 0
            for i in range(j):
                got = sigma[mat[pre[i]][u]]
                want = base[offset + i]
                if got != want:
                    verdict = -1 if got < want else 1
                    break
            if verdict == -1:
                return -1
            if verdict == 1:
                continue
            pre.append(u)
            used[u] = True
            sub = extend(j + 1)
            pre.pop()
            used[u] = False
            if sub == -1:
                return -1
        return 1

    return extend(0) == -1


def _smaller_by_transposition(
    mat: Sequence[Sequence[int]],
    m: int,
    size_class: Sequence[int],
    sigma: Sequence[int],
    base: Sequence[int],
) -> bool:
    candidates = [None] + [(a, b) for b in range(m) for a in range(b) if size_class[a] == size_class[b]]
    for swap in candidates:
        perm = list(range(m))
        if swap is not None:
            a, b = swap
            perm[a], perm[b] = b, a
        elif sigma == sorted(sigma):
            continue
        image = [sigma[mat[perm[i]][perm[j]]] for j in range(1, m) for i in range(j)]
        if image < list(base):
            return True
    return False


def is_canonical(
    mat: Sequence[Sequence[int]],
    m: int,
    size_class: Sequence[int],
    sigmas: Sequence[Sequence[int]],
    cheap: bool = False,
) -> bool:
    """
    Is the coloring of vertices 0..m-1 (``mat[i][j]`` its colors) minimal?

    Args:
        mat:        Symmetric color matrix; only i != j < m is read.
        m:          Number of completed vertices.
        size_class: Vertices may only map to vertices of the same class.
        sigmas:     Color relabelings to combine with vertex permutations.
        cheap:      Test transpositions only.
    """
    if m < 2:
        return True
    base = _code(mat, m)
    test = _smaller_by_transposition if cheap else _smaller_image
    return not any(test(mat, m, size_class, sigma, base) for sigma in sigmas)
