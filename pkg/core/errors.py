"""
Rainbowless - Error Types
============================
Every failure a library operation can report.  Search outcomes
(EXHAUSTED, WITNESS, BUDGET_EXCEEDED) are values, not errors; see
search/problem.py.

The CLI maps these to exit codes in services/jobs.py.
"""

from typing import Any


class GallaiError(Exception):
    """Base class for all library errors."""


# -- Colorings ----------------------------------------------------------------

class MissingPair(GallaiError):
    def __init__(self, u: int, v: int):
        super().__init__(f"pair ({u}, {v}) has no color")
        self.pair = (u, v)


class ColorOutOfRange(GallaiError):
    def __init__(self, color: int, k: int, pair: tuple[int, int] | None = None):
        where = f" on pair {pair}" if pair else ""
        super().__init__(f"color {color} outside [0, {k}){where}")
        self.color = color
        self.k = k
        self.pair = pair


class ArityMismatch(GallaiError):
    pass


class TooLarge(GallaiError):
    pass


# -- Partitions and reduction -------------------------------------------------

class NotGallai(GallaiError):
    def __init__(self, triangle: tuple[int, int, int]):
        super().__init__(f"rainbow triangle {triangle}")
        self.triangle = triangle


class TooSmall(GallaiError):
    pass


class InvalidPartition(GallaiError):
    def __init__(self, reason: str, detail: Any = None):
        super().__init__(reason)
        self.detail = detail


class PreconditionFailed(GallaiError):
    def __init__(self, reason: str, witness: Any = None):
        super().__init__(reason)
        self.witness = witness


class TooSmallRemainder(GallaiError):
    def __init__(self, remainder: list[int], t_set: list[int], floor: int = 2):
        super().__init__(
            f"remainder has {len(remainder)} vertices after extracting |T|={len(t_set)}"
            f" (floor {floor})"
        )
        self.remainder = remainder
        self.t_set = t_set
        self.floor = floor


class ReductionStalled(GallaiError):
    """The remainder's partition keeps a part larger than s(H) - 1."""

    def __init__(self, part: list[int], limit: int):
        super().__init__(f"part of order {len(part)} exceeds {limit}: {part}")
        self.part = part
        self.limit = limit


class Infeasible(GallaiError):
    def __init__(self, estimate: float, budget: int):
        super().__init__(f"projected {estimate:.3g} nodes exceeds budget {budget}")
        self.estimate = estimate
        self.budget = budget


# -- Detectors ----------------------------------------------------------------

class UnsupportedTarget(GallaiError):
    pass


class PartsTooSmall(GallaiError):
    def __init__(self, part_index: int, order: int, needed: int):
        super().__init__(f"part {part_index} has order {order}, needs {needed}")
        self.part_index = part_index
        self.order = order
        self.needed = needed


class NotMatchingInColor(GallaiError):
    pass


# -- Constructions and bounds -------------------------------------------------

class BaseHasMonoH(GallaiError):
    def __init__(self, witness: Any):
        super().__init__(f"base coloring already contains {witness}")
        self.witness = witness


class BadBase(GallaiError):
    pass


class NotPrime(GallaiError):
    pass


class BadResidueClass(GallaiError):
    pass


class BadSizes(GallaiError):
    pass


class MissingR(GallaiError):
    pass


# -- Search -------------------------------------------------------------------

class BudgetExceeded(GallaiError):
    """Raised by the number-level drivers; carries the bracket found so far."""

    def __init__(self, lower: int | None, upper: int | None, certificate: Any = None):
        super().__init__(f"budget exhausted with bracket [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper
        self.certificate = certificate


class CheckpointMismatch(GallaiError):
    pass


# -- Formats and I/O ----------------------------------------------------------

class ColoringSyntaxError(GallaiError):
    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PaletteExhausted(GallaiError):
    pass


class OutputExists(GallaiError):
    pass
