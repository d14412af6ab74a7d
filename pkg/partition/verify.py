"""
Rainbowless - Reduced-Condition Verifier
===========================================
Checks that every 3-colored K_R of the reduced shape contains a
monochromatic H: parts of order at most s(H) - 1 (at least 1), pairs
inside a part in color 2, and a 2-colored reduced graph on the parts.

Each part-order multiset is one blob-mode search.  With several threads
the multisets run side by side on one shared node budget, and results are
merged in multiset order.  The pruned tree size is estimated first, and
the run is refused when the estimate exceeds the budget.
"""

import random
import threading
import time

from sympy.utilities.iterables import partitions

from coloring.targets import TargetGraph
from core.errors import Infeasible
from core.logger import RunLogger
from partition.reduction import THIRD_COLOR
from search.engine import NodeBudget, SearchEngine
from search.problem import Certificate, Outcome, SearchProblem, SearchStats
from search.runner import exists_avoiding_coloring


def part_multisets(R: int, cap: int) -> list[list[int]]:
    """Part-order multisets of R with every part <= cap and at least two parts."""
    out = []
    for p in partitions(R, k=cap):
        sizes = sorted((size for size, count in p.items() for _ in range(count)), reverse=True)
        if len(sizes) >= 2:
            out.append(sizes)
    out.sort(reverse=True)
    return out


def _problem(H: TargetGraph, sizes: list[int], budget: int) -> SearchProblem:
    return SearchProblem(
        n=sum(sizes),
        k=3,
        per_color_targets=[H, H, H],
        budget=budget,
        blobs=sizes,
        inner_color=THIRD_COLOR,
    )


def _run_parallel(
    H: TargetGraph,
    multisets: list[list[int]],
    budget: int,
    threads: int,
) -> dict[int, Certificate]:
    """One multiset per work item; the first non-exhausted result stops the rest."""
    shared = NodeBudget(budget)
    found = threading.Event()
    lock = threading.Lock()
    cursor = [0]
    results: dict[int, Certificate] = {}

    def worker() -> None:
        while not found.is_set():
            with lock:
                idx = cursor[0]
                if idx >= len(multisets):
                    return
                cursor[0] += 1
            engine = SearchEngine(_problem(H, multisets[idx], budget), budget=shared,
                                  stop_event=found, progress_every=0)
            cert = engine.run()
            if engine.stopped:
                return
            with lock:
                results[idx] = cert
            if not cert.exhausted:
                found.set()

    pool = [threading.Thread(target=worker, daemon=True, name=f"reduced-{i}")
            for i in range(min(threads, len(multisets)))]
    for t in pool:
        t.start()
    for t in pool:
        t.join()
    return results


def verify_reduced_condition(
    H: TargetGraph,
    R: int,
    budget: int = 10**9,
    probes: int = 64,
    seed: int = 0,
    threads: int = 1,
    logger: RunLogger | None = None,
) -> Certificate:
    """
    Args:
        H:       Bipartite target.
        R:       Order of the complete graph to check.
        budget:  Node limit for all multisets together.
        probes:  Random probes per multiset for the size estimate.
        seed:    RNG seed of the estimator.
        threads: Worker threads, spread over the multisets when there are
                 several, otherwise given to the single search.
        logger:  Optional run logger.

    Returns:
        EXHAUSTED (every member holds a monochromatic H), WITNESS
        (a counterexample coloring) or BUDGET_EXCEEDED.

    Raises:
        Infeasible: The estimated node count exceeds ``budget``.
    """
    if R < 2:
        raise ValueError(f"R must be at least 2, got {R}")
    a = H.s_value
    cap = max(a - 1, 1)
    multisets = part_multisets(R, cap)
    title = f"reduced condition {H.label} R={R}"
    started = time.monotonic()
    if logger:
        logger.tagged("START", title, part_cap=cap, multisets=len(multisets))

    rng = random.Random(seed)
    estimate = sum(SearchEngine(_problem(H, sizes, budget)).estimate(probes, rng) for sizes in multisets)
    if logger:
        logger.tagged("SEARCH", f"estimated {estimate:.3g} nodes over {len(multisets)} multisets")
    if estimate > budget:
        raise Infeasible(estimate, budget)

    stats = SearchStats()
    outcomes: list[dict] = []
    result: Certificate | None = None
    if threads > 1 and len(multisets) > 1:
        if logger:
            logger.tagged("SEARCH", f"{len(multisets)} multisets over {threads} threads")
        finished = _run_parallel(H, multisets, budget, threads)
        for idx in sorted(finished):
            cert = finished[idx]
            stats.merge(cert.stats)
            outcomes.append({"sizes": multisets[idx], "outcome": cert.outcome.value, "nodes": cert.stats.nodes})
            if result is None and not cert.exhausted:
                result = cert
        if result is None and len(finished) < len(multisets):
            result = Certificate(_problem(H, multisets[0], budget), Outcome.BUDGET_EXCEEDED)
    else:
        remaining = budget
        for sizes in multisets:
            p = _problem(H, sizes, max(remaining, 0))
            cert = exists_avoiding_coloring(p, threads=threads, logger=logger, progress_every=0)
            stats.merge(cert.stats)
            remaining -= cert.stats.nodes
            outcomes.append({"sizes": sizes, "outcome": cert.outcome.value, "nodes": cert.stats.nodes})
            if not cert.exhausted:
                result = cert
                break
    stats.wall_time = time.monotonic() - started

    if result is None:
        result = Certificate(_problem(H, multisets[0], budget), Outcome.EXHAUSTED)
    result.stats = stats
    result.notes.append(f"reduced-condition check of {H.label} at R={R}, parts <= {cap}")
    result.extra.update({
        "mode": "reduced-condition",
        "target": H.label,
        "R": R,
        "part_cap": cap,
        "estimate": round(estimate, 1),
        "multisets": outcomes,
        "verdict": "PASS" if result.exhausted else result.outcome.value,
    })
    if logger:
        logger.run_end(title, result.extra["verdict"], stats.wall_time)
    return result
