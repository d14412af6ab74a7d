"""
Rainbowless - Search Runner
==============================
Single entry point for one SearchProblem: picks the serial or threaded
engine, wires checkpoints and logging, and always returns a Certificate.
"""

import time

from core.logger import RunLogger
from search.checkpoint import load_checkpoint, writer_for
from search.engine import SearchEngine
from search.parallel import run_parallel
from search.problem import Certificate, Outcome, SearchProblem


def exists_avoiding_coloring(
    p: SearchProblem,
    threads: int = 1,
    split_depth: int = 4,
    logger: RunLogger | None = None,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 1_000_000,
    resume_path: str | None = None,
    progress_every: int = 250_000,
) -> Certificate:
    """
    Search for a coloring of K_n avoiding every color's target.

    Args:
        p:                The problem.
        threads:          Worker threads; checkpointed runs stay serial.
        split_depth:      Prefix length per work item when threaded.
        logger:           Optional run logger.
        checkpoint_path:  Where to write the DFS stack periodically.
        checkpoint_every: Nodes between checkpoint writes.
        resume_path:      Checkpoint to continue from.
        progress_every:   Nodes between progress lines.

    Returns:
        WITNESS, EXHAUSTED or BUDGET_EXCEEDED certificate.

    Raises:
        CheckpointMismatch: ``resume_path`` belongs to another problem.
    """
    title = f"search n={p.n} k={p.k} targets={','.join(t.label for t in p.per_color_targets)}"
    if logger:
        logger.tagged("START", title, gallai=p.gallai_constraint, budget=p.budget)
    started = time.monotonic()

    resume = load_checkpoint(resume_path, p) if resume_path else None
    if threads > 1 and not (checkpoint_path or resume):
        cert = run_parallel(p, threads, split_depth, logger, progress_every)
    else:
        if threads > 1 and logger:
            logger.info("checkpointed runs are serial; ignoring --threads")
        engine = SearchEngine(
            p,
            logger=logger,
            progress_every=progress_every,
            checkpoint_path=checkpoint_path,
            checkpoint_every=checkpoint_every if checkpoint_path else 0,
            checkpoint_writer=writer_for(p),
        )
        cert = engine.run(resume=resume)

    if logger:
        tag = {Outcome.WITNESS: "WITNESS", Outcome.EXHAUSTED: "EXHAUSTED"}.get(cert.outcome, "BUDGET")
        logger.tagged(tag, f"n={p.n}: {cert.outcome.value}", **cert.stats.to_dict())
        logger.run_end(title, cert.outcome.value, time.monotonic() - started)
    return cert
