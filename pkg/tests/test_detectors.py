"""
Tests for the monochromatic-target detectors, checked against the
brute-force references in oracles.py.
"""

import random

import pytest

from coloring import EdgeColoring, TargetGraph, find_rainbow_triangle, iter_pairs, substitute
from core.errors import ArityMismatch, NotMatchingInColor, PartsTooSmall, TooSmall
from detectors import (
    MonoWitness,
    contains_target,
    describe_detectors,
    edge_completes_target,
    find_mono_complete_bipartite,
    find_mono_matching,
    find_mono_p3_forest,
    find_mono_star,
    find_mono_target,
    get_detector,
    large_part_bound_check,
    max_mono_star,
    p3_packing_from_matching,
    validate_witness,
)
from detectors.matching import maximum_matching
from partition import GallaiPartition
import oracles

TARGETS = [
    TargetGraph.complete_bipartite(1, 2),
    TargetGraph.complete_bipartite(1, 3),
    TargetGraph.parse("C4"),
    TargetGraph.parse("K2,3"),
    TargetGraph.parse("P2"),
    TargetGraph.parse("2P2"),
    TargetGraph.parse("3P2"),
    TargetGraph.parse("P3"),
    TargetGraph.parse("2P3"),
    TargetGraph.parse("S2"),
    TargetGraph.parse("S3"),
    TargetGraph.parse("K3"),
]


class TestRegistry:

    def test_every_kind_is_registered(self):
        kinds = {d["kind"] for d in describe_detectors()}
        assert kinds == {"complete_bipartite", "matching", "p3_forest", "star", "clique"}

    def test_entries_are_callable(self):
        for target in TARGETS:
            entry = get_detector(target.kind)
            assert callable(entry["finder"])
            assert callable(entry["contains"])
            assert callable(entry["through_edge"])


class TestAgainstBruteForce:

    @pytest.mark.parametrize("target", TARGETS, ids=lambda t: t.label)
    def test_finder_agrees(self, target, random_colorings):
        finder = get_detector(target.kind)["finder"]
        for c in random_colorings:
            for color in range(c.k):
                witness = finder(c, color, target)
                assert (witness is not None) == oracles.contains(c, color, target)
                if witness is not None:
                    assert witness.color == color
                    assert validate_witness(c, witness)

    @pytest.mark.parametrize("target", TARGETS, ids=lambda t: t.label)
    def test_contains_on_vertex_subsets(self, target, random_colorings):
        gen = random.Random(7)
        for c in random_colorings[:40]:
            keep = [v for v in range(c.n) if gen.random() < 0.7]
            if not keep:
                continue
            mask = sum(1 << v for v in keep)
            sub = c.induced(keep)
            for color in range(c.k):
                assert contains_target(c.adjacency(color), mask, target) == oracles.contains(sub, color, target)

    @pytest.mark.parametrize("target", TARGETS, ids=lambda t: t.label)
    def test_edge_completion_while_growing(self, target):
        # Adding edges one at a time to a target-free graph: the edge that
        # creates the first copy is exactly the one reported as completing it
        gen = random.Random(target.order * 31 + target.size)
        for n in (5, 6, 7):
            for _ in range(6):
                pairs = list(iter_pairs(n))
                gen.shuffle(pairs)
                adj = [0] * n
                for x, y in pairs:
                    adj[x] |= 1 << y
                    adj[y] |= 1 << x
                    full = contains_target(adj, (1 << n) - 1, target)
                    assert edge_completes_target(adj, x, y, target, n) == full
                    if full:
                        break

    @pytest.mark.slow
    def test_finders_agree_at_scale(self, large_random_colorings):
        assert len(large_random_colorings) == 1000
        for c in large_random_colorings:
            for target in TARGETS:
                finder = get_detector(target.kind)["finder"]
                for color in range(c.k):
                    witness = finder(c, color, target)
                    assert (witness is not None) == oracles.contains(c, color, target), (c, target)
                    if witness is not None:
                        assert validate_witness(c, witness)

    def test_dispatch_agrees(self, random_colorings):
        for c in random_colorings:
            targets = [TARGETS[(c.n + i) % len(TARGETS)] for i in range(c.k)]
            expected = any(oracles.contains(c, i, t) for i, t in enumerate(targets))
            witness = find_mono_target(c, targets)
            assert (witness is not None) == expected
            if witness is not None:
                assert witness.target == targets[witness.color]


class TestWitnesses:

    def test_tampered_witness_is_rejected(self):
        c = EdgeColoring.monochromatic(5)
        w = find_mono_complete_bipartite(c, 0, 2, 3)
        assert validate_witness(c, w)
        assert not validate_witness(c, MonoWitness(0, w.target, (w.vertices[0], w.vertices[0] + (4,))))
        assert not validate_witness(c.with_k(2), MonoWitness(1, w.target, w.vertices))

    def test_dict_round_trip(self):
        c = EdgeColoring.monochromatic(6)
        w = find_mono_p3_forest(c, 0, 2)
        assert MonoWitness.from_dict(w.to_dict()) == w

    def test_dispatch_arity(self, pentagon, c4):
        with pytest.raises(ArityMismatch):
            find_mono_target(pentagon, [c4])


class TestSpecificDetectors:

    def test_pentagon_has_no_c4(self, pentagon):
        assert find_mono_complete_bipartite(pentagon, 0, 2, 2) is None
        assert find_mono_complete_bipartite(pentagon, 1, 2, 2) is None

    def test_paley17_has_no_k33(self, paley17):
        for color in (0, 1):
            assert find_mono_complete_bipartite(paley17, color, 3, 3) is None

    def test_rook3_has_no_k23(self, rook3):
        for color in (0, 1):
            assert find_mono_complete_bipartite(rook3, color, 2, 3) is None
        assert find_mono_complete_bipartite(rook3, 0, 2, 2) is not None

    def test_maximum_matching_of_clique(self):
        assert len(maximum_matching(EdgeColoring.monochromatic(7), 0)) == 3
        assert find_mono_matching(EdgeColoring.monochromatic(7), 0, 4) is None

    def test_matching_rejects_nonpositive(self, pentagon):
        with pytest.raises(ValueError):
            find_mono_matching(pentagon, 0, 0)

    def test_star(self, pentagon):
        assert find_mono_star(pentagon, 0, 2) is not None
        assert find_mono_star(pentagon, 0, 3) is None

    def test_max_star_of_pentagon(self, pentagon):
        assert max_mono_star(pentagon) == (0, 0, 2)

    def test_max_star_needs_two_vertices(self):
        with pytest.raises(TooSmall):
            max_mono_star(EdgeColoring(1, 1, []))

    def test_gallai_colorings_have_large_stars(self, gallai_corpus):
        for c in gallai_corpus:
            _, _, leaves = max_mono_star(c)
            assert 5 * leaves >= 2 * c.n

    @pytest.mark.slow
    def test_generated_corpus_has_large_stars(self, generated_corpus):
        members = [c for _, kind, c in generated_corpus if kind in ("substitution", "repaired")]
        assert len(members) >= 500
        for c in members:
            assert c.n <= 15 and c.k <= 5
            assert find_rainbow_triangle(c) is None
            _, _, leaves = max_mono_star(c)
            assert 5 * leaves >= 2 * c.n


class TestForestFromMatching:

    @pytest.fixture
    def two_blocks(self):
        outer = EdgeColoring(2, 2, [0])
        inner = EdgeColoring.monochromatic(5, 1, k=2)
        c = substitute(outer, [inner, inner])
        return c, GallaiPartition.from_parts(c, [range(5), range(5, 10)])

    def test_builds_disjoint_paths(self, two_blocks):
        c, p = two_blocks
        triples = p3_packing_from_matching(c, 0, [(0, 1)], p, 2)
        assert len(triples) == 2
        flat = [v for t in triples for v in t]
        assert len(set(flat)) == 6
        for a, center, b in triples:
            assert c.color(a, center) == 0 and c.color(center, b) == 0

    def test_parts_too_small(self, two_blocks):
        c, p = two_blocks
        with pytest.raises(PartsTooSmall):
            p3_packing_from_matching(c, 0, [(0, 1)], p, 4)

    def test_wrong_color(self, two_blocks):
        c, p = two_blocks
        with pytest.raises(NotMatchingInColor):
            p3_packing_from_matching(c, 1, [(0, 1)], p, 2)

    def test_large_part_count(self, two_blocks):
        _, p = two_blocks
        check = large_part_bound_check(p, n_red=5, t=2)
        assert check.threshold == pytest.approx(3.75)
        assert check.count == 2
        assert check.limit == 4
        assert check.ok
