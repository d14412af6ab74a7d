"""
Rainbowless - Test Corpora
=============================
Generates the colorings the property checks run over:

- substitution Gallai colorings: recursive blow-ups of random 2-colored
  outer graphs (Gallai by construction);
- repaired colorings: random colorings whose rainbow triangles are
  removed one recoloring at a time;
- named witnesses from the constructions.

``write_corpus`` stores every coloring in the canonical format plus an
``index.yaml`` describing them.
"""

import os
import random

import yaml

from coloring.model import EdgeColoring, find_rainbow_triangle, iter_pairs
from coloring.substitution import substitute
from coloring.targets import TargetGraph
from constructions import (
    layered_lower_bound,
    matching_extremal,
    p3_forest_lower_bound,
    paley_coloring,
    pentagon_coloring,
    rook_coloring,
)
from core.logger import RunLogger
from core.storage import atomic_write_text
from services.formats import serialize_coloring


def _split(n: int, parts: int, rng: random.Random) -> list[int]:
    cuts = sorted(rng.sample(range(1, n), parts - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [n])]


def substitution_coloring(n: int, k: int, rng: random.Random, max_outer: int = 5) -> EdgeColoring:
    """
    A random Gallai k-coloring of K_n built by nested substitution.

    Every level picks two colors, a random 2-colored outer graph on 2 to
    ``max_outer`` vertices and recursively built inner colorings.
    """
    if n == 1:
        return EdgeColoring(1, k, [])
    if n == 2:
        return EdgeColoring(2, k, [rng.randrange(k)])
    p = rng.randint(2, min(n, max_outer))
    pair = rng.sample(range(k), 2) if k >= 2 else [0, 0]
    outer = EdgeColoring.from_function(p, k, lambda u, v: rng.choice(pair))
    inners = [substitution_coloring(size, k, rng, max_outer) for size in _split(n, p, rng)]
    return substitute(outer, inners)


def repaired_coloring(n: int, k: int, rng: random.Random, max_rounds: int | None = None) -> EdgeColoring | None:
    """
    Uniform random k-coloring with rainbow triangles repaired by copying a
    neighbouring edge's color; None if it does not settle in time.
    """
    pairs = list(iter_pairs(n))
    colors = {pair: rng.randrange(k) for pair in pairs}
    rounds = max_rounds if max_rounds is not None else 4 * len(pairs) + 10
    for _ in range(rounds):
        c = EdgeColoring(n, k, [colors[pair] for pair in pairs])
        triangle = find_rainbow_triangle(c)
        if triangle is None:
            return c
        u, v, w = triangle
        edges = [(u, v), (u, w), (v, w)]
        target, source = rng.sample(edges, 2)
        colors[target] = colors[source]
    return None


def named_witnesses() -> dict[str, EdgeColoring]:
    """Lower-bound witnesses by name."""
    c4, k23, k33 = (TargetGraph.parse(label) for label in ("C4", "K2,3", "K3,3"))
    out = {
        "pentagon": pentagon_coloring(),
        "paley13": paley_coloring(13),
        "paley17": paley_coloring(17),
        "rook3": rook_coloring(3),
        "matching-2-2-2": matching_extremal([2, 2, 2]),
        "p3forest-2-2-2": p3_forest_lower_bound([2, 2, 2]),
        "p3forest-3-2": p3_forest_lower_bound([3, 2]),
    }
    for k in (3, 4):
        out[f"layered-C4-k{k}"] = layered_lower_bound(pentagon_coloring(), c4, k)
    out["layered-K2,3-k4"] = layered_lower_bound(rook_coloring(3), k23, 4)
    for k in (3, 4, 5):
        out[f"layered-K3,3-k{k}"] = layered_lower_bound(paley_coloring(17), k33, k)
    return out


def build_corpus(
    seed: int = 20170101,
    substitution: int = 200,
    repaired: int = 100,
    max_order: int = 15,
    max_colors: int = 5,
) -> list[tuple[str, str, EdgeColoring]]:
    """(name, kind, coloring) for every member, deterministic in ``seed``."""
    rng = random.Random(seed)
    members: list[tuple[str, str, EdgeColoring]] = []
    for i in range(substitution):
        n, k = rng.randint(2, max_order), rng.randint(2, max_colors)
        members.append((f"subst-{i:04d}", "substitution", substitution_coloring(n, k, rng)))
    made = 0
    while made < repaired:
        n, k = rng.randint(3, min(max_order, 10)), rng.randint(3, max_colors)
        c = repaired_coloring(n, k, rng)
        if c is not None:
            members.append((f"repaired-{made:04d}", "repaired", c))
            made += 1
    for name, c in named_witnesses().items():
        members.append((name, "witness", c))
    return members


def write_corpus(
    out_dir: str,
    settings: dict | None = None,
    overwrite: bool = False,
    logger: RunLogger | None = None,
) -> str:
    """
    Generate and persist the corpus; returns the index path.

    Args:
        out_dir:   Target directory.
        settings:  The ``corpus`` config section.
        overwrite: Replace existing files.
    """
    s = settings or {}
    members = build_corpus(
        seed=int(s.get("seed", 20170101)),
        substitution=int(s.get("substitution", 200)),
        repaired=int(s.get("repaired", 100)),
        max_order=int(s.get("max_order", 15)),
        max_colors=int(s.get("max_colors", 5)),
    )
    index = []
    for name, kind, c in members:
        filename = f"{name}.col"
        atomic_write_text(os.path.join(out_dir, filename), serialize_coloring(c), overwrite=overwrite)
        index.append({
            "name": name,
            "file": filename,
            "kind": kind,
            "n": c.n,
            "k": c.k,
            "gallai": find_rainbow_triangle(c) is None,
        })
    path = atomic_write_text(
        os.path.join(out_dir, "index.yaml"),
        yaml.safe_dump({"seed": s.get("seed", 20170101), "members": index}, sort_keys=False),
        overwrite=overwrite,
    )
    if logger:
        logger.tagged("DONE", f"corpus of {len(index)} colorings written to {out_dir}")
    return path
