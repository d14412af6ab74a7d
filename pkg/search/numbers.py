"""
Rainbowless - Ramsey and Gallai-Ramsey Numbers
=================================================
Drivers that turn single searches into numbers.  Each starts at a good
guess (a closed-form bound or a hint), walks down while the search keeps
exhausting and up while it keeps finding witnesses, and returns the
certificates on both sides of the answer.

Lower-side witnesses are taken from the constructions when one of them
fits, so only the hard (exhaustive) side is always searched.
"""

from dataclasses import dataclass, field
from typing import Sequence

from coloring.targets import TargetGraph
from constructions import evaluate_bounds, seed_witness
from core.errors import BudgetExceeded, GallaiError
from core.logger import RunLogger
from search.checkpoint import checkpoint_problem, load_checkpoint
from search.problem import Certificate, Outcome, SearchProblem, witness_is_valid
from search.runner import exists_avoiding_coloring


@dataclass
class SearchSettings:
    """
    Run options shared by every search a driver starts.

    Attributes:
        budget:          Node limit per search.
        threads:         Worker threads.
        split_depth:     Prefix length per work item.
        canonicity:      "full", "cheap" or "off".
        canonicity_threshold: Node count after which "full" degrades.
        vertex_symmetry: Orderly generation on vertices.
        color_symmetry:  Interchangeable colors.
        max_n:           Largest order an upward scan may reach.
        checkpoint_path: Checkpoint file; "{n}" is replaced by the order.
        checkpoint_every: Nodes between checkpoints.
        resume_path:     Checkpoint to continue; used for the order it was
                         written for.
        progress_every:  Nodes between progress lines.
        use_seeds:       Try constructions before searching for a witness.
    """

    budget: int = 10**9
    threads: int = 1
    split_depth: int = 4
    canonicity: str = "full"
    canonicity_threshold: int = 50_000_000
    vertex_symmetry: bool = True
    color_symmetry: bool = True
    max_n: int = 12
    checkpoint_path: str | None = None
    checkpoint_every: int = 1_000_000
    resume_path: str | None = None
    progress_every: int = 250_000
    use_seeds: bool = True

    @classmethod
    def from_config(cls, config: dict, **overrides) -> "SearchSettings":
        s = config.get("search", {})
        settings = cls(
            budget=int(s.get("budget", 10**9)),
            threads=int(s.get("threads", 1)),
            split_depth=int(s.get("split_depth", 4)),
            canonicity=s.get("canonicity", "full"),
            canonicity_threshold=int(s.get("canonicity_node_threshold", 50_000_000)),
            max_n=int(s.get("max_n", 12)),
            checkpoint_every=int(s.get("checkpoint_every", 1_000_000)),
            progress_every=int(s.get("progress_every", 250_000)),
        )
        for key, value in overrides.items():
            if value is not None:
                setattr(settings, key, value)
        return settings


@dataclass
class NumberResult:
    """
    Attributes:
        value: The number found.
        lower: WITNESS certificate at value - 1 (None when value - 1 is
               below the smallest meaningful order).
        upper: EXHAUSTED certificate at value.
        runs:  Every certificate produced, in run order.
    """

    value: int
    lower: Certificate | None
    upper: Certificate
    runs: list[Certificate] = field(default_factory=list)


@dataclass
class VerifyResult:
    """
    Attributes:
        confirmed: Witness below the claim and exhaustion at the claim.
        lower:     Certificate at claimed - 1.
        upper:     Certificate at claimed (None if the lower side already refuted).
        note:      Human-readable verdict.
    """

    confirmed: bool
    lower: Certificate
    upper: Certificate | None
    note: str


# =============================================================================
# Single order
# =============================================================================

class _OrderRunner:
    """Runs (or seeds) the search for one order of a fixed target list."""

    def __init__(
        self,
        targets: Sequence[TargetGraph],
        gallai: bool,
        settings: SearchSettings,
        logger: RunLogger | None,
    ):
        self.targets = list(targets)
        self.k = len(self.targets)
        self.gallai = gallai
        self.settings = settings
        self.logger = logger
        self.runs: list[Certificate] = []
        self.resume_n = None
        if settings.resume_path:
            saved = checkpoint_problem(load_checkpoint(settings.resume_path))
            self.resume_n = saved.n if saved else None

    def problem(self, n: int) -> SearchProblem:
        s = self.settings
        return SearchProblem(
            n=n,
            k=self.k,
            per_color_targets=self.targets,
            gallai_constraint=self.gallai,
            require_all_colors=self.gallai,
            budget=s.budget,
            vertex_symmetry=s.vertex_symmetry,
            color_symmetry=s.color_symmetry,
            canonicity=s.canonicity,
            canonicity_threshold=s.canonicity_threshold,
        )

    def run(self, n: int, seeded: bool = True) -> Certificate:
        p = self.problem(n)
        s = self.settings
        seed = seed_witness(self.targets, self.k, n) if seeded and s.use_seeds else None
        if seed is not None and witness_is_valid(p, seed):
            cert = Certificate(p, Outcome.WITNESS, seed, notes=["seeded from constructions"])
            if self.logger:
                self.logger.tagged("WITNESS", f"n={n}: seeded from constructions")
        else:
            checkpoint = s.checkpoint_path.replace("{n}", str(n)) if s.checkpoint_path else None
            cert = exists_avoiding_coloring(
                p,
                threads=s.threads,
                split_depth=s.split_depth,
                logger=self.logger,
                checkpoint_path=checkpoint,
                checkpoint_every=s.checkpoint_every,
                resume_path=s.resume_path if n == self.resume_n else None,
                progress_every=s.progress_every,
            )
        self.runs.append(cert)
        return cert


def _smallest_order(
    runner: _OrderRunner,
    start: int,
    floor: int,
) -> NumberResult:
    """
    Smallest n >= floor at which the search exhausts.

    Orders below ``floor`` are exhausted without searching; a value equal
    to ``floor`` therefore has no lower certificate.
    """
    max_n = runner.settings.max_n
    n = max(start, floor)
    cert = runner.run(n)

    if cert.outcome is Outcome.BUDGET_EXCEEDED:
        raise BudgetExceeded(None, None, cert)

    if cert.exhausted:
        upper = cert
        while n - 1 >= floor:
            below = runner.run(n - 1)
            if below.outcome is Outcome.BUDGET_EXCEEDED:
                raise BudgetExceeded(None, n, below)
            if below.found:
                return NumberResult(n, below, upper, runner.runs)
            n, upper = n - 1, below
        return NumberResult(n, None, upper, runner.runs)

    lower = cert
    while n + 1 <= max_n:
        above = runner.run(n + 1)
        if above.outcome is Outcome.BUDGET_EXCEEDED:
            raise BudgetExceeded(n + 1, None, above)
        if above.exhausted:
            return NumberResult(n + 1, lower, above, runner.runs)
        n, lower = n + 1, above
    raise BudgetExceeded(n + 1, None, lower)


def _formula_start(targets: Sequence[TargetGraph], k: int) -> int | None:
    if len(set(targets)) != 1:
        return None
    try:
        return evaluate_bounds(targets[0], max(k, 2)).lower
    except (GallaiError, ValueError):
        return None


# =============================================================================
# Public drivers
# =============================================================================

def ramsey_number(
    targets: Sequence[TargetGraph],
    n_hint: int | None = None,
    settings: SearchSettings | None = None,
    logger: RunLogger | None = None,
) -> NumberResult:
    """
    R(targets[0], targets[1]) by search, 2 colors, no Gallai constraint.

    Raises:
        BudgetExceeded: A run hit its budget or the scan passed max_n; the
                        bracket known so far is attached.
    """
    if len(targets) != 2:
        raise ValueError(f"ramsey_number takes two targets, got {len(targets)}")
    settings = settings or SearchSettings()
    runner = _OrderRunner(targets, gallai=False, settings=settings, logger=logger)
    start = n_hint or _formula_start(targets, 2) or max(t.order for t in targets)
    return _smallest_order(runner, start, floor=1)


def gallai_ramsey_number(
    per_color_targets: Sequence[TargetGraph],
    k: int | None = None,
    n_hint: int | None = None,
    settings: SearchSettings | None = None,
    logger: RunLogger | None = None,
) -> NumberResult:
    """
    gr_k(K3 : H_1, ..., H_k) by search over Gallai colorings using all k colors.

    Raises:
        BudgetExceeded: As in ramsey_number.
    """
    k = k or len(per_color_targets)
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if len(per_color_targets) != k:
        raise ValueError(f"{len(per_color_targets)} targets for {k} colors")
    settings = settings or SearchSettings()
    runner = _OrderRunner(per_color_targets, gallai=True, settings=settings, logger=logger)
    floor = _palette_floor(k)
    start = n_hint or _formula_start(per_color_targets, k) or max(t.order for t in per_color_targets)
    return _smallest_order(runner, start, floor)


def _palette_floor(k: int) -> int:
    """Smallest n whose pair count can hold k colors."""
    n = 2
    while n * (n - 1) // 2 < k:
        n += 1
    return n


def verify_value(
    H: TargetGraph | Sequence[TargetGraph],
    k: int,
    claimed: int,
    settings: SearchSettings | None = None,
    logger: RunLogger | None = None,
) -> VerifyResult:
    """
    Confirm gr_k(K3 : H) = claimed with a witness at claimed - 1 and an
    exhaustion at claimed.  A target list gives one target per color.

    Raises:
        BudgetExceeded: Either side ran out of budget.
    """
    if claimed < 2:
        raise ValueError(f"claimed value must be at least 2, got {claimed}")
    targets = [H] * k if isinstance(H, TargetGraph) else list(H)
    if len(targets) != k:
        raise ValueError(f"{len(targets)} targets for {k} colors")
    settings = settings or SearchSettings()
    runner = _OrderRunner(targets, gallai=True, settings=settings, logger=logger)

    lower = runner.run(claimed - 1)
    if lower.outcome is Outcome.BUDGET_EXCEEDED:
        raise BudgetExceeded(None, None, lower)
    if not lower.found:
        return VerifyResult(False, lower, None,
                            f"refuted: no avoiding coloring at {claimed - 1}, the value is at most {claimed - 1}")

    upper = runner.run(claimed, seeded=False)
    if upper.outcome is Outcome.BUDGET_EXCEEDED:
        raise BudgetExceeded(claimed, None, upper)
    if upper.found:
        return VerifyResult(False, lower, upper,
                            f"refuted: an avoiding coloring exists at {claimed}, the value exceeds {claimed}")
    return VerifyResult(True, lower, upper, f"confirmed: value is {claimed}")
