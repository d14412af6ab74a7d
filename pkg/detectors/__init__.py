"""
Rainbowless - Detector Registry
==================================
Central registry of monochromatic-target detectors.  Each detector module
registers itself on import via ``register_detector()``; the dispatcher
and the search engine look detectors up by target kind.

Usage:
    from detectors import find_mono_target, get_detector
"""

from typing import Callable

from coloring.targets import TargetKind

_registry: dict[TargetKind, dict] = {}


def register_detector(
    kind: TargetKind,
    description: str,
    finder: Callable,
    contains: Callable,
    through_edge: Callable,
) -> None:
    """
    Register the detector for one target kind.

    Args:
        kind:         Target kind handled.
        description:  One line shown by ``detect --list``.
        finder:       (coloring, color, target) -> MonoWitness | None
        contains:     (adj, mask, target) -> bool on raw bitsets
        through_edge: (adj, x, y, target, n) -> bool; is there a copy
                      using the edge xy
    """
    _registry[kind] = {
        "kind": kind,
        "description": description,
        "finder": finder,
        "contains": contains,
        "through_edge": through_edge,
    }


def get_detector(kind: TargetKind) -> dict | None:
    return _registry.get(kind)


def get_detector_kinds() -> list[TargetKind]:
    return list(_registry.keys())


def describe_detectors() -> list[dict]:
    return [{"kind": d["kind"].value, "description": d["description"]} for d in _registry.values()]


# Import order registers every detector kind
from detectors import bipartite, matching, forest, star, clique  # noqa: E402,F401
from detectors.witness import MonoWitness, validate_witness  # noqa: E402
from detectors.bipartite import find_mono_complete_bipartite  # noqa: E402
from detectors.matching import find_mono_matching  # noqa: E402
from detectors.forest import (  # noqa: E402
    find_mono_p3_forest,
    p3_packing_from_matching,
    large_part_bound_check,
)
from detectors.star import max_mono_star, find_mono_star  # noqa: E402
from detectors.clique import find_mono_clique  # noqa: E402
from detectors.dispatch import find_mono_target, contains_target, edge_completes_target  # noqa: E402

__all__ = [
    "register_detector",
    "get_detector",
    "get_detector_kinds",
    "describe_detectors",
    "MonoWitness",
    "validate_witness",
    "find_mono_complete_bipartite",
    "find_mono_matching",
    "find_mono_p3_forest",
    "p3_packing_from_matching",
    "large_part_bound_check",
    "max_mono_star",
    "find_mono_star",
    "find_mono_clique",
    "find_mono_target",
    "contains_target",
    "edge_completes_target",
]
