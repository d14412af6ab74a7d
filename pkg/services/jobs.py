"""
Rainbowless - Job Runner
===========================
One command invocation as data (JobConfig) and its execution.

A JobConfig round-trips through YAML, so a long search can be described
in a file and replayed.  ``run_job`` dispatches to the library, writes
artifacts (never over an existing file unless ``force`` is set) and
maps outcomes to exit codes:

    0  success / claim confirmed
    1  usage or I/O error, invalid input
    2  claim refuted
    3  budget exceeded (or projected to be)
"""

import os
from dataclasses import dataclass, field
from typing import Literal

import yaml
from pydantic import BaseModel, Field

from coloring.model import EdgeColoring, find_rainbow_triangle
from coloring.targets import TargetGraph
from constructions import (
    evaluate_bounds,
    layered_lower_bound,
    matching_extremal,
    p3_forest_lower_bound,
    paley_coloring,
    pentagon_coloring,
    rook_coloring,
)
from core.errors import BudgetExceeded, GallaiError, Infeasible
from core.logger import RunLogger
from core.storage import atomic_write_text, read_text
from detectors import describe_detectors, find_mono_target, get_detector, max_mono_star
from partition import (
    Reduced,
    extract_reduction,
    find_gallai_partition,
    reduced_graph,
    verify_reduced_condition,
)
from search import (
    Certificate,
    Outcome,
    SearchProblem,
    SearchSettings,
    exists_avoiding_coloring,
    gallai_ramsey_number,
    ramsey_number,
    verify_value,
)
from services.certificates import certificate_name, save_certificate
from services.formats import export_dot, parse_coloring, serialize_coloring

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REFUTED = 2
EXIT_BUDGET = 3

Command = Literal["detect", "partition", "reduce", "construct", "bounds", "search", "verify", "dot"]
Construction = Literal["paley", "rook", "pentagon", "layered", "matching", "p3forest"]


# =============================================================================
# Job description
# =============================================================================

class JobConfig(BaseModel):
    """Everything one command needs; unset fields fall back to config.yaml."""

    command: Command
    coloring: str | None = None
    targets: list[str] = Field(default_factory=list)
    k: int | None = Field(None, ge=1)
    n: int | None = Field(None, ge=1)
    r_value: int | None = None
    sizes: list[int] | None = None
    claimed: int | None = None
    construction: Construction | None = None
    param: int | None = None
    base: str | None = None
    mode: Literal["ramsey", "gr", "single"] | None = None
    reduced: bool = False
    gallai: bool | None = None
    all_colors: bool | None = None
    n_hint: int | None = None
    max_n: int | None = None
    budget: int | None = Field(None, ge=0)
    threads: int | None = Field(None, ge=1)
    checkpoint: str | None = None
    resume: str | None = None
    out: str | None = None
    force: bool = False
    clusters: bool = False
    output_format: Literal["text", "yaml"] = "text"
    list_detectors: bool = False

    def to_yaml(self) -> str:
        return yaml.safe_dump(self.model_dump(exclude_defaults=True), sort_keys=False)

    @classmethod
    def from_yaml(cls, text: str) -> "JobConfig":
        return cls.model_validate(yaml.safe_load(text) or {})


@dataclass
class JobResult:
    """
    Attributes:
        exit_code: One of the EXIT_* codes.
        output:    Text for stdout.
        artifacts: Paths written.
    """

    exit_code: int
    output: str = ""
    artifacts: list[str] = field(default_factory=list)


# =============================================================================
# Helpers
# =============================================================================

def _targets(job: JobConfig, k: int | None = None) -> list[TargetGraph]:
    """Parse target labels; a single label is repeated for every color."""
    if not job.targets:
        raise GallaiError("at least one target is required (--targets)")
    targets = [TargetGraph.parse(label) for label in job.targets]
    if k is not None and len(targets) == 1:
        targets = targets * k
    return targets


def _load_coloring(job: JobConfig) -> EdgeColoring:
    if not job.coloring:
        raise GallaiError("an input coloring is required (--coloring)")
    return parse_coloring(read_text(job.coloring))


def _write(job: JobConfig, path: str, text: str, result: JobResult) -> None:
    result.artifacts.append(atomic_write_text(path, text, overwrite=job.force))


def _emit_coloring(job: JobConfig, c: EdgeColoring, result: JobResult) -> str:
    """Write to ``out`` when given, else return the text for stdout."""
    text = serialize_coloring(c)
    if job.out:
        _write(job, job.out, text, result)
        return ""
    return text


def _settings(job: JobConfig, config: dict) -> SearchSettings:
    return SearchSettings.from_config(
        config,
        budget=job.budget,
        threads=job.threads,
        max_n=job.max_n,
        checkpoint_path=job.checkpoint,
        resume_path=job.resume,
    )


def _cert_dir(job: JobConfig, config: dict) -> str:
    return job.out or config.get("output", {}).get("certificate_dir", "certificates")


def _save_certs(job: JobConfig, config: dict, stem: str, certs: list[Certificate | None],
                result: JobResult) -> None:
    directory = _cert_dir(job, config)
    for cert in certs:
        if cert is None:
            continue
        path = os.path.join(directory, certificate_name(cert, stem))
        result.artifacts.append(save_certificate(path, cert, overwrite=job.force))


def _format_mapping(data: dict, job: JobConfig) -> str:
    if job.output_format == "yaml":
        return yaml.safe_dump(data, sort_keys=False)
    width = max((len(str(key)) for key in data), default=0)
    return "\n".join(f"{key:<{width}}  {value}" for key, value in data.items()) + "\n"


# =============================================================================
# Commands
# =============================================================================

def _detect(job: JobConfig, config: dict, logger: RunLogger | None) -> JobResult:
    if job.list_detectors:
        lines = [f"{d['kind']:<20} {d['description']}" for d in describe_detectors()]
        return JobResult(EXIT_OK, "\n".join(lines) + "\n")
    c = _load_coloring(job)
    targets = _targets(job, c.k)
    if len(targets) != c.k:
        raise GallaiError(f"{len(targets)} targets for a {c.k}-coloring")
    lines = []
    triangle = find_rainbow_triangle(c)
    lines.append(f"rainbow triangle: {triangle if triangle else 'ABSENT'}")
    for color, target in enumerate(targets):
        witness = get_detector(target.kind)["finder"](c, color, target)
        state = f"PRESENT {witness.to_dict()['vertices']}" if witness else "ABSENT"
        lines.append(f"color {color} {target.label}: {state}")
    for color in range(c.k):
        degrees = [c.degree(v, color) for v in range(c.n)] or [0]
        lines.append(f"color {color} class: {c.edge_count(color)} edges, degree {min(degrees)}..{max(degrees)}")
    if c.n >= 2:
        color, center, leaves = max_mono_star(c)
        lines.append(f"largest monochromatic star: {leaves} leaves at vertex {center} in color {color}")
    return JobResult(EXIT_OK, "\n".join(lines) + "\n")


def _partition(job: JobConfig, config: dict, logger: RunLogger | None) -> JobResult:
    c = _load_coloring(job)
    p = find_gallai_partition(c)
    result = JobResult(EXIT_OK)
    data = {
        "parts": len(p.parts),
        "sizes": p.sizes(),
        "reduced_colors": list(p.reduced_colors),
        "members": [list(part) for part in p.parts],
    }
    reduced = reduced_graph(c, p)
    if job.out:
        _write(job, job.out, serialize_coloring(reduced), result)
    result.output = _format_mapping(data, job)
    return result


def _reduce(job: JobConfig, config: dict, logger: RunLogger | None) -> JobResult:
    c = _load_coloring(job)
    (H,) = _targets(job)[:1]
    if job.r_value is None:
        raise GallaiError("reduce needs --r")
    outcome = extract_reduction(c, H, job.r_value, logger=logger)
    result = JobResult(EXIT_OK)
    if isinstance(outcome, Reduced):
        data = {
            "outcome": "REDUCED",
            "order": outcome.g_prime.n,
            "size_floor": outcome.size_floor,
            "t_set": outcome.t_set,
            "reinserted": outcome.reinserted,
            "part_sizes": outcome.partition.sizes(),
            "palette": list(outcome.palette),
        }
        if job.out:
            _write(job, job.out, serialize_coloring(outcome.g_prime), result)
    else:
        data = {"outcome": "MONO_WITNESS", **outcome.to_dict()}
    result.output = _format_mapping(data, job)
    return result


def _build_base(name: str) -> EdgeColoring:
    bases = {"pentagon": pentagon_coloring, "rook3": lambda: rook_coloring(3), "paley17": lambda: paley_coloring(17)}
    if name in bases:
        return bases[name]()
    return parse_coloring(read_text(name))


def _construct(job: JobConfig, config: dict, logger: RunLogger | None) -> JobResult:
    kind = job.construction
    if kind == "paley":
        c = paley_coloring(job.param or 17)
    elif kind == "rook":
        c = rook_coloring(job.param or 3)
    elif kind == "pentagon":
        c = pentagon_coloring()
    elif kind == "layered":
        (H,) = _targets(job)[:1]
        c = layered_lower_bound(_build_base(job.base or "pentagon"), H, job.k or 3)
    elif kind == "matching":
        c = matching_extremal(job.sizes or [2, 2])
    elif kind == "p3forest":
        c = p3_forest_lower_bound(job.sizes or [2, 2])
    else:
        raise GallaiError(f"unknown construction {kind!r}")

    result = JobResult(EXIT_OK)
    checks = [f"# K{c.n}, {c.k} colors, rainbow triangle: {'PRESENT' if find_rainbow_triangle(c) else 'ABSENT'}"]
    if job.targets:
        targets = _targets(job, c.k)
        witness = find_mono_target(c, targets) if len(targets) == c.k else None
        checks.append(f"# targets {','.join(t.label for t in targets)}: "
                      f"{'PRESENT in color ' + str(witness.color) if witness else 'ABSENT'}")
    if logger:
        for line in checks:
            logger.info(line[2:])
    result.output = "\n".join(checks) + "\n" + _emit_coloring(job, c, result)
    return result


def _bounds(job: JobConfig, config: dict, logger: RunLogger | None) -> JobResult:
    (H,) = _targets(job)[:1]
    report = evaluate_bounds(H, job.k or 3, r_value=job.r_value, sizes=job.sizes)
    return JobResult(EXIT_OK, _format_mapping(report.to_dict(), job))


def _search(job: JobConfig, config: dict, logger: RunLogger | None) -> JobResult:
    settings = _settings(job, config)
    mode = job.mode or ("single" if job.n else "gr")
    result = JobResult(EXIT_OK)

    if mode == "single":
        k = job.k or len(job.targets)
        targets = _targets(job, k)
        problem = SearchProblem(
            n=job.n or 2, k=k, per_color_targets=targets,
            gallai_constraint=k >= 3 if job.gallai is None else job.gallai,
            require_all_colors=k >= 3 if job.all_colors is None else job.all_colors,
            budget=settings.budget, canonicity=settings.canonicity,
            canonicity_threshold=settings.canonicity_threshold,
        )
        cert = exists_avoiding_coloring(
            problem, threads=settings.threads, split_depth=settings.split_depth, logger=logger,
            checkpoint_path=settings.checkpoint_path, checkpoint_every=settings.checkpoint_every,
            resume_path=settings.resume_path, progress_every=settings.progress_every,
        )
        _save_certs(job, config, "search", [cert], result)
        result.output = f"n={problem.n}: {cert.outcome.value} (nodes={cert.stats.nodes})\n"
        if cert.outcome is Outcome.BUDGET_EXCEEDED:
            result.exit_code = EXIT_BUDGET
        return result

    if mode == "ramsey":
        targets = _targets(job, 2)
        found = ramsey_number(targets, n_hint=job.n_hint, settings=settings, logger=logger)
        stem = "ramsey"
    else:
        k = job.k or len(job.targets)
        targets = _targets(job, k)
        found = gallai_ramsey_number(targets, k, n_hint=job.n_hint, settings=settings, logger=logger)
        stem = "gr"
    _save_certs(job, config, stem, [found.lower, found.upper], result)
    labels = ",".join(t.label for t in targets)
    result.output = f"{stem}({labels}) = {found.value}\n"
    return result


def _verify(job: JobConfig, config: dict, logger: RunLogger | None) -> JobResult:
    result = JobResult(EXIT_OK)
    if job.reduced:
        (H,) = _targets(job)[:1]
        r = job.r_value or job.claimed
        if r is None:
            raise GallaiError("verify --reduced needs --r")
        reduction = config.get("reduction", {})
        cert = verify_reduced_condition(
            H, r,
            budget=job.budget if job.budget is not None else int(reduction.get("budget", 10**9)),
            probes=int(reduction.get("probes", 64)),
            threads=job.threads or 1,
            logger=logger,
        )
        _save_certs(job, config, "reduced", [cert], result)
        verdict = cert.extra.get("verdict", cert.outcome.value)
        result.output = f"reduced condition {H.label} at R={r}: {verdict}\n"
        result.exit_code = {Outcome.EXHAUSTED: EXIT_OK, Outcome.WITNESS: EXIT_REFUTED}.get(cert.outcome, EXIT_BUDGET)
        return result

    if job.claimed is None:
        raise GallaiError("verify needs --claimed")
    k = job.k or max(len(job.targets), 2)
    targets = _targets(job, k)
    checked = verify_value(targets, k, job.claimed, settings=_settings(job, config), logger=logger)
    _save_certs(job, config, "verify", [checked.lower, checked.upper], result)
    result.output = checked.note + "\n"
    result.exit_code = EXIT_OK if checked.confirmed else EXIT_REFUTED
    return result


def _dot(job: JobConfig, config: dict, logger: RunLogger | None) -> JobResult:
    c = _load_coloring(job)
    clusters = None
    if job.clusters and c.n >= 2 and find_rainbow_triangle(c) is None:
        clusters = [p for p in find_gallai_partition(c).parts if len(p) > 1]
    text = export_dot(c, clusters=clusters)
    result = JobResult(EXIT_OK)
    if job.out:
        _write(job, job.out, text, result)
    else:
        result.output = text
    return result


COMMANDS = {
    "detect": _detect,
    "partition": _partition,
    "reduce": _reduce,
    "construct": _construct,
    "bounds": _bounds,
    "search": _search,
    "verify": _verify,
    "dot": _dot,
}


def run_job(job: JobConfig, config: dict | None = None, logger: RunLogger | None = None) -> JobResult:
    """
    Execute one job.  Library errors become exit codes; the message is
    logged and returned as output.
    """
    config = config or {}
    try:
        return COMMANDS[job.command](job, config, logger)
    except BudgetExceeded as e:
        if logger:
            logger.tagged("BUDGET", str(e))
        return JobResult(EXIT_BUDGET, f"budget exceeded: {e}\n")
    except Infeasible as e:
        if logger:
            logger.tagged("BUDGET", str(e))
        return JobResult(EXIT_BUDGET, f"infeasible: {e}\n")
    except (GallaiError, OSError, ValueError) as e:
        if logger:
            logger.error(str(e))
        return JobResult(EXIT_ERROR, f"error: {e}\n")
