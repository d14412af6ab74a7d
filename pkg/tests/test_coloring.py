"""
Tests for the coloring core: construction, queries, rainbow detection,
target labels and substitution.
"""

import pytest

from coloring import (
    EdgeColoring,
    ColoringBuilder,
    TargetGraph,
    TargetKind,
    blob_ranges,
    color_class,
    contract,
    find_rainbow_triangle,
    iter_pairs,
    new_coloring,
    pair_index,
    palette_full,
    substitute,
)
from core.errors import (
    ArityMismatch,
    ColorOutOfRange,
    MissingPair,
    TooLarge,
    UnsupportedTarget,
)
from oracles import rainbow_triangles


class TestEdgeColoring:

    def test_pair_index_matches_iteration_order(self):
        for n in (2, 5, 9):
            assert [pair_index(n, u, v) for u, v in iter_pairs(n)] == list(range(n * (n - 1) // 2))

    def test_color_is_symmetric(self, pentagon):
        for u, v in iter_pairs(5):
            assert pentagon.color(u, v) == pentagon.color(v, u)

    def test_adjacency_matches_colors(self, rook3):
        for color in (0, 1):
            adj = rook3.adjacency(color)
            for u, v, col in rook3.pairs():
                assert bool(adj[u] >> v & 1) == (col == color)

    def test_pentagon_is_two_five_cycles(self, pentagon):
        assert pentagon.edge_count(0) == 5
        assert pentagon.edge_count(1) == 5
        assert all(pentagon.degree(v, 0) == 2 for v in range(5))

    def test_single_vertex(self):
        c = EdgeColoring(1, 3, [])
        assert c.used_colors() == []
        assert find_rainbow_triangle(c) is None

    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            EdgeColoring(0, 2, [])
        with pytest.raises(ValueError):
            EdgeColoring(3, 2, [0, 1])
        with pytest.raises(TooLarge):
            EdgeColoring.monochromatic(65)
        with pytest.raises(ColorOutOfRange):
            EdgeColoring(3, 2, [0, 1, 2])

    def test_induced_relabels_in_given_order(self, pentagon):
        sub = pentagon.induced([4, 0, 2])
        assert sub.n == 3
        assert sub.color(0, 1) == pentagon.color(4, 0)
        assert sub.color(1, 2) == pentagon.color(0, 2)

    def test_recolor_and_palette(self, pentagon):
        swapped = pentagon.recolor([1, 0])
        assert all(swapped.color(u, v) == 1 - pentagon.color(u, v) for u, v in iter_pairs(5))
        assert palette_full(swapped)
        assert not palette_full(pentagon.with_k(3))

    def test_color_class_graph(self, pentagon):
        g = color_class(pentagon, 0)
        assert g.number_of_nodes() == 5
        assert g.number_of_edges() == 5


class TestNewColoring:

    def test_accepts_either_orientation(self):
        c = new_coloring(3, 2, {(1, 0): 0, frozenset((0, 2)): 1, (1, 2): 1})
        assert c.colors == (0, 1, 1)

    def test_missing_pair(self):
        with pytest.raises(MissingPair) as e:
            new_coloring(3, 2, {(0, 1): 0, (0, 2): 1})
        assert e.value.pair == (1, 2)

    def test_color_out_of_range(self):
        with pytest.raises(ColorOutOfRange):
            new_coloring(2, 2, {(0, 1): 2})


class TestRainbowTriangle:

    def test_three_colored_triangle(self):
        assert find_rainbow_triangle(EdgeColoring(3, 3, [0, 1, 2])) == (0, 1, 2)

    def test_two_colorings_are_gallai(self, rook3, paley17):
        assert find_rainbow_triangle(rook3) is None
        assert find_rainbow_triangle(paley17) is None

    def test_agrees_with_brute_force(self, random_colorings):
        for c in random_colorings:
            found = find_rainbow_triangle(c)
            triangles = rainbow_triangles(c)
            if triangles:
                assert found in triangles
            else:
                assert found is None

    @pytest.mark.slow
    def test_agrees_with_brute_force_at_scale(self, large_random_colorings):
        for c in large_random_colorings:
            found = find_rainbow_triangle(c)
            triangles = rainbow_triangles(c)
            assert (found is None) == (not triangles)
            if found is not None:
                assert found in triangles

    def test_substitution_corpus_is_gallai(self, gallai_corpus):
        for c in gallai_corpus:
            assert find_rainbow_triangle(c) is None


class TestColoringBuilder:

    def test_creates_rainbow_only_on_closed_triangles(self):
        b = ColoringBuilder(4, 3)
        b.assign(0, 1, 0)
        b.assign(0, 2, 1)
        assert b.creates_rainbow(1, 2, 2)
        assert not b.creates_rainbow(1, 2, 0)
        assert not b.creates_rainbow(1, 3, 2)

    def test_unassign_restores_state(self):
        b = ColoringBuilder(3, 2)
        b.assign(0, 1, 1)
        b.unassign(0, 1)
        assert b.color(0, 1) == -1
        assert b.counts == [0, 0]
        assert b.seen == [0, 0, 0]

    def test_freeze_reports_missing_pair(self):
        b = ColoringBuilder(3, 2)
        b.assign(0, 1, 0)
        b.assign(1, 2, 0)
        with pytest.raises(MissingPair) as e:
            b.freeze()
        assert e.value.pair == (0, 2)

    def test_round_trip(self, pentagon):
        assert ColoringBuilder.from_coloring(pentagon).freeze() == pentagon


class TestTargetGraph:

    @pytest.mark.parametrize("label,kind,order,s", [
        ("C4", TargetKind.COMPLETE_BIPARTITE, 4, 2),
        ("K2,3", TargetKind.COMPLETE_BIPARTITE, 5, 2),
        ("K3,3", TargetKind.COMPLETE_BIPARTITE, 6, 3),
        ("3P2", TargetKind.MATCHING, 6, 3),
        ("P3", TargetKind.P3_FOREST, 3, 1),
        ("2P3", TargetKind.P3_FOREST, 6, 2),
        ("S4", TargetKind.STAR, 5, 1),
    ])
    def test_parse(self, label, kind, order, s):
        t = TargetGraph.parse(label)
        assert t.kind is kind
        assert t.order == order
        assert t.s_value == s
        assert t.is_bipartite

    def test_labels_round_trip(self):
        for label in ("K2,2", "K2,3", "K3,5", "2P2", "P2", "4P3", "S3", "K4"):
            assert TargetGraph.parse(TargetGraph.parse(label).label) == TargetGraph.parse(label)

    def test_c4_is_k22(self):
        assert TargetGraph.parse("C4").label == "K2,2"
        assert TargetGraph.parse("k{3,2}") == TargetGraph.complete_bipartite(2, 3)

    def test_clique_is_not_bipartite(self):
        k3 = TargetGraph.parse("K3")
        assert not k3.is_bipartite
        with pytest.raises(UnsupportedTarget):
            k3.s_value

    def test_single_edge_clique_is_a_matching(self):
        k2 = TargetGraph.parse("K2")
        assert k2 == TargetGraph.matching(1)
        assert k2.is_bipartite
        assert k2.s_value == 1

    @pytest.mark.parametrize("p", [3, 4, 6])
    def test_cliques_never_claim_a_bipartition(self, p):
        t = TargetGraph.clique(p)
        assert not t.is_bipartite
        with pytest.raises(UnsupportedTarget):
            t.s_value

    def test_bad_labels(self):
        for label in ("C5", "K0", "K1", "P4", "Kx,y"):
            with pytest.raises(UnsupportedTarget):
                TargetGraph.parse(label)


class TestSubstitution:

    def test_blob_ranges(self):
        assert blob_ranges([2, 1, 3]) == [[0, 1], [2], [3, 4, 5]]

    def test_blow_up_of_pentagon(self, pentagon):
        inners = [EdgeColoring.monochromatic(2, 2, k=3) for _ in range(5)]
        c = substitute(pentagon, inners)
        assert c.n == 10
        assert c.k == 3
        assert c.color(0, 1) == 2
        assert c.color(0, 2) == pentagon.color(0, 1)
        assert find_rainbow_triangle(c) is None
        assert contract(c, blob_ranges([2] * 5)) == pentagon.with_k(3)

    def test_offsets_shift_inner_colors(self):
        outer = EdgeColoring(2, 2, [0])
        inner = EdgeColoring(2, 1, [0])
        c = substitute(outer, [inner, inner], inner_color_offsets=[1, [2]])
        assert c.color(0, 1) == 1
        assert c.color(2, 3) == 2
        assert c.k == 3

    def test_arity_mismatch(self, pentagon):
        with pytest.raises(ArityMismatch):
            substitute(pentagon, [EdgeColoring(1, 1, [])] * 4)
