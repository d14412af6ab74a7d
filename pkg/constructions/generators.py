"""
Rainbowless - Extremal Colorings
===================================
Generators for lower-bound witnesses.  None of them certifies its own
output; tests and `construct` run the independent detectors on every
result.

All layered constructions share one shape: a core coloring followed by
apex blocks, where every pair touching a block (and not touching a later
block) gets that block's color.  Such colorings never contain a rainbow
triangle: the two pairs at the latest vertex of a triangle share a color.
"""

from typing import Callable, Sequence

from sympy import isprime

from coloring.model import EdgeColoring, MAX_VERTICES, iter_pairs
from coloring.targets import TargetGraph
from core.errors import BadBase, BadResidueClass, BadSizes, BaseHasMonoH, NotPrime, TooLarge
from detectors import find_mono_target


def _layered(
    core_n: int,
    core_color: Callable[[int, int], int],
    layers: Sequence[tuple[int, int]],
    k: int,
) -> EdgeColoring:
    """
    Core on vertices 0..core_n-1, then one block per (order, color) layer.
    """
    n = core_n + sum(order for order, _ in layers)
    if n > MAX_VERTICES:
        raise TooLarge(f"construction needs {n} vertices")
    block_color = [None] * core_n
    for order, color in layers:
        block_color.extend([color] * order)

    def color(u: int, v: int) -> int:
        if v < core_n:
            return core_color(u, v)
        return block_color[v]

    return EdgeColoring(n, k, [color(u, v) for u, v in iter_pairs(n)])


# =============================================================================
# Layered lower bound
# =============================================================================

def layered_lower_bound(base: EdgeColoring, H: TargetGraph, k: int) -> EdgeColoring:
    """
    Extend a 2-colored, H-free base by s(H) - 1 apex vertices per extra color.

    Args:
        base: 2-coloring of K_{R-1} with no monochromatic H.
        H:    Bipartite target.
        k:    Total number of colors (>= 2).

    Returns:
        Gallai k-coloring on (R-1) + (s(H)-1)(k-2) vertices with no
        monochromatic H.

    Raises:
        BadBase:      ``base`` uses a color other than 0 and 1.
        BaseHasMonoH: ``base`` already contains H (witness attached).
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if any(col > 1 for col in base.used_colors()):
        raise BadBase(f"base uses colors {base.used_colors()}, expected only 0 and 1")
    two = base if base.k == 2 else base.with_k(2)
    witness = find_mono_target(two, [H, H])
    if witness is not None:
        raise BaseHasMonoH(witness)
    if k == 2:
        return two

    s = H.s_value
    layers = [(s - 1, color) for color in range(2, k)]
    return _layered(base.n, base.color, layers, k)


# =============================================================================
# Two-colorings from algebra and grids
# =============================================================================

def paley_coloring(q: int) -> EdgeColoring:
    """
    Color {u, v} with 0 when u - v is a nonzero square mod q, else 1.

    Raises:
        NotPrime:        q is not prime.
        BadResidueClass: q is not 1 mod 4.
        TooLarge:        q exceeds the vertex cap.
    """
    if not isprime(q):
        raise NotPrime(f"{q} is not prime")
    if q % 4 != 1:
        raise BadResidueClass(f"{q} is not 1 mod 4")
    if q > MAX_VERTICES:
        raise TooLarge(f"q={q} exceeds the {MAX_VERTICES}-vertex cap")
    squares = {(x * x) % q for x in range(1, q)}
    return EdgeColoring.from_function(q, 2, lambda u, v: 0 if (v - u) % q in squares else 1)


def pentagon_coloring() -> EdgeColoring:
    """The 2-coloring of K5 with two 5-cycles."""
    return paley_coloring(5)


def rook_coloring(s: int) -> EdgeColoring:
    """
    Color 0 between cells of an s x s grid sharing a row or column.

    Raises:
        TooLarge: s * s exceeds the vertex cap.
    """
    if s < 2:
        raise ValueError(f"grid side must be at least 2, got {s}")
    if s * s > MAX_VERTICES:
        raise TooLarge(f"{s}x{s} grid exceeds the {MAX_VERTICES}-vertex cap")
    return EdgeColoring.from_function(
        s * s, 2,
        lambda u, v: 0 if u // s == v // s or u % s == v % s else 1,
    )


# =============================================================================
# Linear forests
# =============================================================================

def _check_sizes(sizes: Sequence[int]) -> list[int]:
    sizes = list(sizes)
    if not sizes:
        raise BadSizes("at least one size is required")
    if any(s < 1 for s in sizes):
        raise BadSizes(f"sizes must be positive: {sizes}")
    if sizes != sorted(sizes, reverse=True):
        raise BadSizes(f"sizes must be non-increasing: {sizes}")
    return sizes


def matching_extremal(sizes: Sequence[int]) -> EdgeColoring:
    """
    Nested-blocks coloring with no n_i P2 in color i.

    A block of 2n_1 - 1 vertices colored 0, then blocks of n_i - 1
    vertices for colors 1..k-1.  Every matching in color i >= 1 uses a
    vertex of its block, so it has at most n_i - 1 edges.
    """
    sizes = _check_sizes(sizes)
    layers = [(n_i - 1, color) for color, n_i in enumerate(sizes) if color > 0]
    return _layered(2 * sizes[0] - 1, lambda u, v: 0, layers, len(sizes))


def p3_forest_lower_bound(sizes: Sequence[int]) -> EdgeColoring:
    """
    K_{3n_1 - 1} in color 0 plus n_i - 1 apex vertices in each color i >= 1.

    Order 2n_1 + sum(n_i - 1).  Every P3 in color i >= 1 uses an apex
    vertex of its block, so there are at most n_i - 1 disjoint ones.
    """
    sizes = _check_sizes(sizes)
    layers = [(n_i - 1, color) for color, n_i in enumerate(sizes) if color > 0]
    return _layered(3 * sizes[0] - 1, lambda u, v: 0, layers, len(sizes))
