"""
Tests for the branch-and-prune engine, checkpoints, threading and the
number-level drivers.
"""

import random

import pytest

from coloring import TargetGraph, find_rainbow_triangle, palette_full
from core.errors import ArityMismatch, BudgetExceeded, CheckpointMismatch, Infeasible
from detectors import find_mono_target
from partition import THIRD_COLOR, part_multisets, verify_reduced_condition
from search import (
    Outcome,
    SearchEngine,
    SearchProblem,
    SearchSettings,
    checkpoint_problem,
    exists_avoiding_coloring,
    gallai_ramsey_number,
    load_checkpoint,
    ramsey_number,
    verify_value,
)
from search.symmetry import class_lookup, color_classes, color_maps

C4 = TargetGraph.parse("C4")
K3 = TargetGraph.parse("K3")
P2x2 = TargetGraph.parse("2P2")
P3 = TargetGraph.parse("P3")
P3x2 = TargetGraph.parse("2P3")


def _problem(n, targets, **kwargs):
    return SearchProblem(n=n, k=len(targets), per_color_targets=list(targets), **kwargs)


class TestSearchProblem:

    def test_arity(self):
        with pytest.raises(ArityMismatch):
            SearchProblem(n=4, k=3, per_color_targets=[C4, C4])

    def test_blob_orders_must_sum(self):
        with pytest.raises(ArityMismatch):
            SearchProblem(n=5, k=3, per_color_targets=[C4] * 3, blobs=[2, 2], inner_color=2)

    def test_bad_canonicity(self):
        with pytest.raises(ValueError):
            _problem(4, [C4, C4], canonicity="sometimes")

    def test_dict_round_trip_keeps_hash(self):
        p = _problem(6, [C4, K3], gallai_constraint=True, budget=77)
        q = SearchProblem.from_dict(p.to_dict())
        assert q.problem_hash() == p.problem_hash()
        assert q.budget == 77

    def test_budget_does_not_change_hash(self):
        assert _problem(5, [C4, C4], budget=1).problem_hash() == _problem(5, [C4, C4]).problem_hash()


class TestSymmetryTables:

    def test_classes_group_equal_targets(self):
        assert color_classes([C4, K3, C4], [0, 1, 2]) == [[0, 2], [1]]

    def test_maps_start_with_identity(self):
        maps = color_maps([[0, 2], [1]], 3)
        assert maps[0] == [0, 1, 2]
        assert [2, 1, 0] in maps
        assert len(maps) == 2

    def test_lookup(self):
        assert class_lookup([[0, 2], [1]], 3) == [[], [], [0]]


class TestEngine:

    def test_single_vertex_is_a_witness(self):
        cert = exists_avoiding_coloring(_problem(1, [C4, C4]))
        assert cert.found
        assert cert.witness.n == 1

    @pytest.mark.parametrize("targets,witness_n", [
        ([C4, C4], 5),
        ([K3, K3], 5),
        ([P2x2, P2x2], 4),
        ([P3x2, P3], 5),
    ])
    def test_two_color_ramsey_threshold(self, targets, witness_n):
        below = exists_avoiding_coloring(_problem(witness_n, targets))
        assert below.found
        assert find_mono_target(below.witness, targets) is None
        at = exists_avoiding_coloring(_problem(witness_n + 1, targets))
        assert at.exhausted
        assert at.witness is None
        assert at.stats.nodes > 0

    def test_gallai_witness_uses_every_color(self):
        cert = exists_avoiding_coloring(
            _problem(5, [P2x2] * 3, gallai_constraint=True, require_all_colors=True))
        assert cert.found
        assert find_rainbow_triangle(cert.witness) is None
        assert palette_full(cert.witness)

    def test_gallai_exhausts_above_threshold(self):
        cert = exists_avoiding_coloring(
            _problem(6, [P2x2] * 3, gallai_constraint=True, require_all_colors=True))
        assert cert.exhausted
        assert cert.stats.prunes["rainbow"] > 0

    @pytest.mark.parametrize("options", [
        {"vertex_symmetry": False},
        {"color_symmetry": False},
        {"vertex_symmetry": False, "color_symmetry": False},
        {"canonicity": "cheap"},
        {"canonicity": "full", "canonicity_threshold": 10},
    ])
    def test_symmetry_settings_agree(self, options):
        for n, expected in ((5, Outcome.WITNESS), (6, Outcome.EXHAUSTED)):
            assert exists_avoiding_coloring(_problem(n, [C4, C4], **options)).outcome is expected

    def test_symmetry_prunes_nodes(self):
        plain = exists_avoiding_coloring(_problem(6, [C4, C4], vertex_symmetry=False, color_symmetry=False))
        reduced = exists_avoiding_coloring(_problem(6, [C4, C4]))
        assert reduced.stats.nodes < plain.stats.nodes

    def test_threads_agree_with_serial(self):
        for n in (5, 6):
            serial = exists_avoiding_coloring(_problem(n, [C4, C4]))
            threaded = exists_avoiding_coloring(_problem(n, [C4, C4]), threads=3, split_depth=3)
            assert threaded.outcome is serial.outcome
            if threaded.found:
                assert find_mono_target(threaded.witness, [C4, C4]) is None

    def test_budget_exceeded(self):
        cert = exists_avoiding_coloring(_problem(6, [C4, C4], budget=3))
        assert cert.outcome is Outcome.BUDGET_EXCEEDED
        assert cert.stats.nodes == 3

    def test_estimate_and_frontier(self):
        p = _problem(6, [C4, C4])
        assert SearchEngine(p).estimate(16, random.Random(3)) >= 1.0
        prefixes = SearchEngine(p).frontier(3)
        assert prefixes
        assert all(len(prefix) == 3 for prefix in prefixes)


class TestBlobMode:

    def test_inner_color_fills_parts(self):
        p = SearchProblem(n=3, k=3, per_color_targets=[C4] * 3, blobs=[2, 1], inner_color=THIRD_COLOR)
        cert = exists_avoiding_coloring(p)
        assert cert.found
        assert cert.witness.color(0, 1) == THIRD_COLOR
        assert cert.witness.color(0, 2) == cert.witness.color(1, 2)

    def test_two_pairs_force_a_cycle(self):
        p = SearchProblem(n=4, k=3, per_color_targets=[C4] * 3, blobs=[2, 2], inner_color=THIRD_COLOR)
        assert exists_avoiding_coloring(p).exhausted

    def test_inner_color_alone_can_hold_target(self):
        matching = TargetGraph.matching(2)
        p = SearchProblem(n=4, k=3, per_color_targets=[matching] * 3, blobs=[2, 2], inner_color=THIRD_COLOR)
        cert = exists_avoiding_coloring(p)
        assert cert.exhausted
        assert cert.stats.nodes == 0


class TestCheckpoints:

    def test_resume_reaches_the_same_witness(self, tmp_path):
        path = str(tmp_path / "run.yaml")
        cut = exists_avoiding_coloring(_problem(5, [C4, C4], budget=5), checkpoint_path=path)
        assert cut.outcome is Outcome.BUDGET_EXCEEDED

        state = load_checkpoint(path)
        assert checkpoint_problem(state).n == 5
        assert state["stats"]["nodes"] == 5

        full = _problem(5, [C4, C4])
        resumed = exists_avoiding_coloring(full, resume_path=path)
        assert resumed.found
        assert resumed.checkpoint_id == full.problem_hash()
        assert resumed.witness == exists_avoiding_coloring(full).witness

    def test_resume_of_an_exhaustive_run(self, tmp_path):
        path = str(tmp_path / "run.yaml")
        cut = exists_avoiding_coloring(_problem(6, [C4, C4], budget=20), checkpoint_path=path)
        assert cut.outcome is Outcome.BUDGET_EXCEEDED
        resumed = exists_avoiding_coloring(_problem(6, [C4, C4]), resume_path=path)
        assert resumed.exhausted

    def test_mismatched_problem(self, tmp_path):
        path = str(tmp_path / "run.yaml")
        exists_avoiding_coloring(_problem(5, [C4, C4], budget=5), checkpoint_path=path)
        with pytest.raises(CheckpointMismatch):
            exists_avoiding_coloring(_problem(6, [C4, C4]), resume_path=path)

    def test_unreadable_checkpoint(self, tmp_path):
        path = tmp_path / "junk.yaml"
        path.write_text("- just\n- a list\n", encoding="utf-8")
        with pytest.raises(CheckpointMismatch):
            load_checkpoint(str(path))


class TestNumbers:

    def test_ramsey_c4(self):
        result = ramsey_number([C4, C4])
        assert result.value == 6
        assert result.lower.found and result.lower.witness.n == 5
        assert result.upper.exhausted and result.upper.problem.n == 6

    @pytest.mark.parametrize("targets,value", [
        ([K3, K3], 6),
        ([P2x2, P2x2], 5),
        ([P3x2, P3], 6),
    ])
    def test_small_ramsey_numbers(self, targets, value):
        assert ramsey_number(targets).value == value

    def test_gallai_ramsey_matchings(self):
        result = gallai_ramsey_number([P2x2] * 3)
        assert result.value == 6
        assert "seeded from constructions" in result.lower.notes

    def test_budget_exceeded_carries_bracket(self):
        with pytest.raises(BudgetExceeded) as e:
            ramsey_number([C4, C4], settings=SearchSettings(budget=3, use_seeds=False))
        assert e.value.certificate.outcome is Outcome.BUDGET_EXCEEDED

    def test_scan_stops_at_max_n(self):
        with pytest.raises(BudgetExceeded) as e:
            ramsey_number([K3, K3], settings=SearchSettings(max_n=4))
        assert e.value.lower == 5

    def test_verify_confirms(self, c4):
        result = verify_value(c4, 2, 6)
        assert result.confirmed
        assert result.upper.exhausted

    def test_verify_refutes_low_claim(self, c4):
        result = verify_value(c4, 2, 5)
        assert not result.confirmed
        assert result.upper.found

    def test_verify_refutes_high_claim(self, c4):
        result = verify_value(c4, 2, 7)
        assert not result.confirmed
        assert result.upper is None
        assert result.lower.exhausted

    @pytest.mark.slow
    def test_gallai_ramsey_c4_three_colors(self):
        assert gallai_ramsey_number([C4] * 3).value == 7


class TestReducedCondition:

    def test_multisets(self):
        assert part_multisets(4, 2) == [[2, 2], [2, 1, 1], [1, 1, 1, 1]]
        assert part_multisets(3, 1) == [[1, 1, 1]]

    @pytest.mark.parametrize("label,r", [("P3", 3), ("C4", 6)])
    def test_passes(self, label, r):
        cert = verify_reduced_condition(TargetGraph.parse(label), r)
        assert cert.exhausted
        assert cert.extra["verdict"] == "PASS"
        assert cert.extra["R"] == r

    def test_counterexample_below_threshold(self, c4):
        cert = verify_reduced_condition(c4, 5)
        assert cert.found
        assert cert.extra["verdict"] == "WITNESS"
        assert find_mono_target(cert.witness, [c4] * 3) is None

    @pytest.mark.parametrize("r", [5, 6])
    def test_threads_agree_with_serial_for_one_multiset(self, c4, r):
        serial = verify_reduced_condition(c4, r)
        threaded = verify_reduced_condition(c4, r, threads=2)
        assert threaded.extra["verdict"] == serial.extra["verdict"]

    def test_multisets_run_side_by_side(self):
        k33 = TargetGraph.parse("K3,3")
        serial = verify_reduced_condition(k33, 5)
        threaded = verify_reduced_condition(k33, 5, threads=3)
        assert serial.extra["verdict"] == threaded.extra["verdict"] == "WITNESS"
        assert threaded.extra["multisets"][0]["sizes"] == [2, 2, 1]
        assert find_mono_target(threaded.witness, [k33] * 3) is None

    @pytest.mark.slow
    def test_threaded_verdict_for_three_edge_matching(self):
        h = TargetGraph.matching(3)
        serial = verify_reduced_condition(h, 8)
        threaded = verify_reduced_condition(h, 8, threads=4)
        assert threaded.extra["verdict"] == serial.extra["verdict"]
        assert [m["sizes"] for m in threaded.extra["multisets"]] == sorted(
            (m["sizes"] for m in threaded.extra["multisets"]), reverse=True
        )

    def test_projected_budget(self, c4):
        with pytest.raises(Infeasible):
            verify_reduced_condition(c4, 6, budget=1)

    def test_rejects_small_r(self, c4):
        with pytest.raises(ValueError):
            verify_reduced_condition(c4, 1)
