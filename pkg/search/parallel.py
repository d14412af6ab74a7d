"""
Rainbowless - Parallel Search
================================
Splits a search at a fixed depth: every surviving color prefix of the
first ``split_depth`` pairs is one work item.  Workers are plain threads
that pull prefixes from a shared index, draw nodes from one NodeBudget
and watch a shared stop event that the first witness sets.

Results are merged by prefix order: the reported witness is the one from
the lowest-indexed prefix that produced one.
"""

import threading
import time

from core.logger import RunLogger
from search.engine import NodeBudget, SearchEngine
from search.problem import Certificate, Outcome, SearchProblem, SearchStats


def run_parallel(
    problem: SearchProblem,
    threads: int,
    split_depth: int,
    logger: RunLogger | None = None,
    progress_every: int = 0,
) -> Certificate:
    started = time.monotonic()
    budget = NodeBudget(problem.budget)
    splitter = SearchEngine(problem, budget=budget)
    prefixes = splitter.frontier(split_depth)
    budget.take(splitter.stats.nodes)
    if logger:
        logger.tagged("SEARCH", f"{len(prefixes)} work items at depth {split_depth}, {threads} threads")

    results: dict[int, Certificate] = {}
    found = threading.Event()
    lock = threading.Lock()
    cursor = [0]

    def worker() -> None:
        while not found.is_set():
            with lock:
                idx = cursor[0]
                if idx >= len(prefixes):
                    return
                cursor[0] += 1
            engine = SearchEngine(problem, logger=None, budget=budget, stop_event=found,
                                  progress_every=progress_every)
            cert = engine.run(prefix=prefixes[idx])
            if engine.stopped:
                return
            with lock:
                results[idx] = cert
            if cert.outcome is Outcome.WITNESS:
                found.set()
            elif cert.outcome is Outcome.BUDGET_EXCEEDED:
                return

    pool = [threading.Thread(target=worker, daemon=True, name=f"search-{i}") for i in range(max(1, threads))]
    for t in pool:
        t.start()
    for t in pool:
        t.join()

    stats = SearchStats()
    stats.merge(splitter.stats)
    for idx in sorted(results):
        stats.merge(results[idx].stats)
    stats.wall_time = time.monotonic() - started

    witnesses = [results[i] for i in sorted(results) if results[i].outcome is Outcome.WITNESS]
    if witnesses:
        return Certificate(problem, Outcome.WITNESS, witnesses[0].witness, stats,
                           notes=[f"split at depth {split_depth} into {len(prefixes)} prefixes"])
    complete = len(results) == len(prefixes) and all(c.exhausted for c in results.values())
    outcome = Outcome.EXHAUSTED if complete else Outcome.BUDGET_EXCEEDED
    return Certificate(problem, outcome, None, stats,
                       notes=[f"split at depth {split_depth} into {len(prefixes)} prefixes"])
