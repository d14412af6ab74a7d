"""
Rainbowless - Gallai Partitions
==================================
Finding, validating and exploiting Gallai partitions.

Usage:
    from partition import find_gallai_partition, reduced_graph, extract_reduction
"""

from partition.gallai import (
    GallaiPartition,
    PartitionCheck,
    find_gallai_partition,
    validate_partition,
    reduced_graph,
    refine_partition,
)
from partition.dichotomy import DichotomyReport, check_part_dichotomy
from partition.reduction import Reduced, ReductionOutcome, extract_reduction, THIRD_COLOR
from partition.verify import verify_reduced_condition, part_multisets

__all__ = [
    "GallaiPartition",
    "PartitionCheck",
    "find_gallai_partition",
    "validate_partition",
    "reduced_graph",
    "refine_partition",
    "DichotomyReport",
    "check_part_dichotomy",
    "Reduced",
    "ReductionOutcome",
    "extract_reduction",
    "THIRD_COLOR",
    "verify_reduced_condition",
    "part_multisets",
]
