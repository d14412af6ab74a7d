"""
Rainbowless - Exhaustive Search
==================================
Branch-and-prune search over colorings of K_n, and the drivers that turn
it into Ramsey and Gallai-Ramsey numbers.

Usage:
    from search import SearchProblem, exists_avoiding_coloring, gallai_ramsey_number
"""

from search.problem import SearchProblem, SearchStats, Certificate, Outcome, witness_is_valid
from search.engine import SearchEngine, NodeBudget
from search.runner import exists_avoiding_coloring
from search.checkpoint import save_checkpoint, load_checkpoint, checkpoint_problem
from search.numbers import (
    SearchSettings,
    NumberResult,
    VerifyResult,
    ramsey_number,
    gallai_ramsey_number,
    verify_value,
)

__all__ = [
    "SearchProblem",
    "SearchStats",
    "Certificate",
    "Outcome",
    "witness_is_valid",
    "SearchEngine",
    "NodeBudget",
    "exists_avoiding_coloring",
    "save_checkpoint",
    "load_checkpoint",
    "checkpoint_problem",
    "SearchSettings",
    "NumberResult",
    "VerifyResult",
    "ramsey_number",
    "gallai_ramsey_number",
    "verify_value",
]
