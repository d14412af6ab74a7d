"""
Rainbowless - Part-Size Dichotomy
====================================
In a Gallai coloring of K_n with n >= 3m - 2 and no monochromatic
K_{l,m}, the largest part of a Gallai partition has order at most l - 1
or at least n - 2l + 2.  This module checks that claim on a concrete
partition and reports a refutation instead of asserting.
"""

from dataclasses import dataclass

from coloring.model import EdgeColoring, find_rainbow_triangle
from core.errors import InvalidPartition, NotGallai, PreconditionFailed
from detectors import find_mono_complete_bipartite
from partition.gallai import GallaiPartition, validate_partition


@dataclass
class DichotomyReport:
    """
    Attributes:
        largest:    Order of the largest part.
        small_side: largest <= l - 1.
        large_side: largest >= n - 2l + 2.
        refutation: Neither side holds.
    """

    n: int
    l: int
    m: int
    largest: int
    small_side: bool
    large_side: bool
    refutation: bool

    @property
    def side(self) -> str:
        if self.small_side:
            return "small"
        if self.large_side:
            return "large"
        return "refutation"


def check_part_dichotomy(c: EdgeColoring, p: GallaiPartition, l: int, m: int) -> DichotomyReport:
    """
    Raises:
        PreconditionFailed: n < 3m - 2, or a monochromatic K_{l,m} exists
                            (the witness is attached).
        NotGallai:          ``c`` has a rainbow triangle.
        InvalidPartition:   ``p`` is not a Gallai partition of ``c``.
    """
    if l > m:
        raise ValueError(f"need l <= m, got ({l}, {m})")
    if c.n < 3 * m - 2:
        raise PreconditionFailed(f"n={c.n} is below 3m-2={3 * m - 2}")
    triangle = find_rainbow_triangle(c)
    if triangle is not None:
        raise NotGallai(triangle)
    for color in range(c.k):
        witness = find_mono_complete_bipartite(c, color, l, m)
        if witness is not None:
            raise PreconditionFailed(f"monochromatic K{l},{m} in color {color}", witness)
    check = validate_partition(c, p)
    if not check:
        raise InvalidPartition(check.reason, check)

    largest = p.largest()
    small = largest <= l - 1
    large = largest >= c.n - 2 * l + 2
    return DichotomyReport(c.n, l, m, largest, small, large, not (small or large))
