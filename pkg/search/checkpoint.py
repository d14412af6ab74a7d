"""
Rainbowless - Search Checkpoints
===================================
The engine's DFS stack as a YAML document:

    problem_hash: <sha256 of the problem>
    base:  number of prefix pairs fixed by the caller
    level: current depth
    assigned: colors of the pairs above the current depth
    next:  per level, the next color index to try
    stats: counters at save time
    problem: the full problem, so a checkpoint is self-describing
"""

import yaml

from core.errors import CheckpointMismatch
from core.storage import atomic_write_text, read_text
from search.problem import SearchProblem


def save_checkpoint(path: str, state: dict, problem: SearchProblem | None = None) -> str:
    doc = dict(state)
    if problem is not None:
        doc["problem"] = problem.to_dict()
    return atomic_write_text(path, yaml.safe_dump(doc, sort_keys=False))


def load_checkpoint(path: str, problem: SearchProblem | None = None) -> dict:
    """
    Raises:
        CheckpointMismatch: Unreadable file, or it belongs to another problem.
    """
    try:
        state = yaml.safe_load(read_text(path))
    except (OSError, yaml.YAMLError) as e:
        raise CheckpointMismatch(f"cannot read checkpoint {path}: {e}") from e
    if not isinstance(state, dict) or "problem_hash" not in state:
        raise CheckpointMismatch(f"{path} is not a checkpoint")
    if problem is not None and state["problem_hash"] != problem.problem_hash():
        raise CheckpointMismatch(f"{path} was written for a different problem")
    return state


def checkpoint_problem(state: dict) -> SearchProblem | None:
    data = state.get("problem")
    return SearchProblem.from_dict(data) if data else None


def writer_for(problem: SearchProblem):
    """Engine callback that embeds ``problem`` in every checkpoint."""
    def write(path: str, state: dict) -> None:
        save_checkpoint(path, state, problem)
    return write
