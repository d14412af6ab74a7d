#!/usr/bin/env python3
"""
Rainbowless - Entry Point
============================
Command-line surface for Gallai colorings: detection, partitions,
reductions, constructions, bounds and exhaustive searches.

Usage:
    python app.py construct paley 17 --targets K3,3
    python app.py detect coloring.col --targets K3,3
    python app.py bounds --targets K2,3 --k 5
    python app.py search gr --targets C4 --k 3
    python app.py verify --targets C4 --k 3 --claimed 7
    python app.py --corpus data/corpus
"""

import argparse
import os
import shutil
import sys

from dotenv import load_dotenv


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Rainbowless - Gallai colorings and Gallai-Ramsey numbers",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Exit codes: 0 ok, 1 usage/IO error, 2 claim refuted, 3 budget exceeded.",
    )
    parser.add_argument("--config", default=None, help="Path to config.yaml")
    parser.add_argument("--budget", type=int, default=None, help="Node budget (overrides config)")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads")
    parser.add_argument("--checkpoint", default=None, help="Checkpoint file ({n} expands to the order)")
    parser.add_argument("--resume", default=None, help="Resume from a checkpoint file")
    parser.add_argument("--out", default=None, help="Output file or directory")
    parser.add_argument("--force", action="store_true", help="Overwrite existing outputs")
    parser.add_argument("--quiet", action="store_true", help="No log echo on stderr")
    parser.add_argument("--format", dest="output_format", choices=["text", "yaml"], default="text")
    parser.add_argument("--corpus", default=None, metavar="DIR", help="Generate the test corpora into DIR")
    parser.add_argument("--job", default=None, help="Run a job described in a YAML file")
    parser.add_argument("--save-job", default=None, help="Write the parsed job as YAML and exit")

    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("detect", help="Rainbow triangles and monochromatic targets")
    p.add_argument("coloring", nargs="?")
    p.add_argument("--targets", nargs="+", default=[])
    p.add_argument("--list", dest="list_detectors", action="store_true", help="List detector kinds")

    p = sub.add_parser("partition", help="Gallai partition and reduced graph")
    p.add_argument("coloring")

    p = sub.add_parser("reduce", help="Reduce to three colors")
    p.add_argument("coloring")
    p.add_argument("--targets", nargs="+", required=True)
    p.add_argument("--r", dest="r_value", type=int, required=True)

    p = sub.add_parser("construct", help="Lower-bound constructions")
    p.add_argument("construction", choices=["paley", "rook", "pentagon", "layered", "matching", "p3forest"])
    p.add_argument("values", nargs="*", type=int, help="q, grid side, or sizes n_1 >= n_2 >= ...")
    p.add_argument("--base", default=None, help="pentagon, rook3, paley17 or a coloring file")
    p.add_argument("--targets", nargs="+", default=[])
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("bounds", help="Closed-form bounds on gr_k(K3 : H)")
    p.add_argument("--targets", nargs="+", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", dest="r_value", type=int, default=None)
    p.add_argument("--sizes", nargs="+", type=int, default=None)

    p = sub.add_parser("search", help="Exhaustive search")
    p.add_argument("mode", choices=["ramsey", "gr", "single"])
    p.add_argument("--targets", nargs="+", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=None, help="Order for a single search")
    p.add_argument("--n-hint", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--gallai", dest="gallai", action=argparse.BooleanOptionalAction, default=None,
                   help="Forbid rainbow triangles in a single search (default: k >= 3)")
    p.add_argument("--all-colors", dest="all_colors", action=argparse.BooleanOptionalAction, default=None,
                   help="Require every color to appear in a single search (default: k >= 3)")

    p = sub.add_parser("verify", help="Confirm a claimed value")
    p.add_argument("--targets", nargs="+", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--claimed", type=int, default=None)
    p.add_argument("--reduced", action="store_true", help="Check the reduced 3-colored condition at R")
    p.add_argument("--r", dest="r_value", type=int, default=None)

    p = sub.add_parser("dot", help="Graphviz export")
    p.add_argument("coloring")
    p.add_argument("--clusters", action="store_true", help="Group Gallai partition parts")

    return parser


def _job_from_args(args: argparse.Namespace):
    from services.jobs import JobConfig

    fields = dict(
        command=args.command,
        out=args.out,
        force=args.force,
        budget=args.budget,
        threads=args.threads,
        checkpoint=args.checkpoint,
        resume=args.resume,
        output_format=args.output_format,
    )
    for name in ("coloring", "targets", "k", "n", "r_value", "sizes", "claimed", "base",
                 "mode", "reduced", "n_hint", "max_n", "clusters", "list_detectors", "construction",
                 "gallai", "all_colors"):
        value = getattr(args, name, None)
        if value is not None:
            fields[name] = value
    values = getattr(args, "values", None)
    if values:
        if args.construction in ("matching", "p3forest"):
            fields["sizes"] = values
        else:
            fields["param"] = values[0]
    return JobConfig(**fields)


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, load config, run one job and return its exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)

    # -- Resolve project directory --
    project_dir = os.path.dirname(os.path.abspath(__file__))

    # -- Ensure config.yaml exists --
    config_path = args.config or os.path.join(project_dir, "config.yaml")
    config_example = os.path.join(project_dir, "config.yaml.example")
    if not os.path.exists(config_path) and os.path.exists(config_example):
        shutil.copy2(config_example, config_path)
        print("[INIT] Created config.yaml from template", file=sys.stderr)

    # -- Load .env --
    env_path = os.path.join(project_dir, ".env")
    if os.path.exists(env_path):
        load_dotenv(env_path)

    # -- Load config --
    from core.config import ConfigManager
    from core.logger import RunLogger
    config = ConfigManager(project_dir, config_path).load()
    if "_config_error" in config:
        print(f"[WARN] config.yaml unreadable, using defaults: {config['_config_error']}", file=sys.stderr)

    logger = RunLogger(log_dir=config["output"]["log_dir"], quiet=args.quiet)

    # -- Corpus generation --
    if args.corpus:
        from services.corpus import write_corpus
        from core.errors import GallaiError
        try:
            write_corpus(args.corpus, config.get("corpus"), overwrite=args.force, logger=logger)
        except (GallaiError, OSError) as e:
            logger.error(str(e))
            return 1
        if not args.command and not args.job:
            return 0

    from services.jobs import JobConfig, run_job
    from pydantic import ValidationError

    try:
        if args.job:
            with open(args.job, "r", encoding="utf-8") as f:
                job = JobConfig.from_yaml(f.read())
        elif args.command:
            job = _job_from_args(args)
        else:
            parser.print_help()
            return 1
    except (ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    if args.save_job:
        from core.errors import OutputExists
        from core.storage import atomic_write_text
        try:
            atomic_write_text(args.save_job, job.to_yaml(), overwrite=args.force)
        except (OutputExists, OSError) as e:
            logger.error(str(e))
            return 1
        return 0

    logger.run_start(f"rainbowless {job.command}")
    result = run_job(job, config, logger)
    if result.output:
        sys.stdout.write(result.output)
    for path in result.artifacts:
        logger.info(f"wrote {path}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
