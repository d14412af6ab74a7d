"""
Tests for the job runner and the command-line entry point: outputs,
artifacts and exit codes.
"""

import os

import pytest
from pydantic import ValidationError

import app
from coloring import TargetGraph
from constructions import layered_lower_bound, pentagon_coloring, rook_coloring
from services.formats import parse_coloring, serialize_coloring
from services.jobs import EXIT_BUDGET, EXIT_ERROR, EXIT_OK, EXIT_REFUTED, JobConfig, run_job


@pytest.fixture
def config(tmp_path):
    return {"output": {"certificate_dir": str(tmp_path / "certs")}}


@pytest.fixture
def pentagon_file(tmp_path):
    path = tmp_path / "pentagon.col"
    path.write_text(serialize_coloring(pentagon_coloring()), encoding="utf-8")
    return str(path)


def _run(config, **fields):
    return run_job(JobConfig(**fields), config)


class TestJobConfig:

    def test_yaml_round_trip(self):
        job = JobConfig(command="search", mode="gr", targets=["C4"], k=3, budget=1000)
        assert JobConfig.from_yaml(job.to_yaml()) == job

    def test_defaults_are_left_out(self):
        text = JobConfig(command="bounds", targets=["K3,3"], k=3).to_yaml()
        assert text.startswith("command: bounds\n")
        assert "force" not in text

    @pytest.mark.parametrize("fields", [
        {"command": "bounds", "k": 0},
        {"command": "frobnicate"},
        {"command": "search", "threads": 0},
    ])
    def test_validation(self, fields):
        with pytest.raises(ValidationError):
            JobConfig(**fields)


class TestCommands:

    def test_detect(self, config, pentagon_file):
        result = _run(config, command="detect", coloring=pentagon_file, targets=["C4"])
        assert result.exit_code == EXIT_OK
        assert "rainbow triangle: ABSENT" in result.output
        assert "color 0 K2,2: ABSENT" in result.output
        assert "2 leaves" in result.output

    def test_detect_reports_color_classes(self, config, pentagon_file):
        result = _run(config, command="detect", coloring=pentagon_file, targets=["C4"])
        assert "color 0 class: 5 edges, degree 2..2" in result.output
        assert "color 1 class: 5 edges, degree 2..2" in result.output

    def test_detect_lists_kinds(self, config):
        result = _run(config, command="detect", list_detectors=True)
        assert "complete_bipartite" in result.output

    def test_missing_file(self, config, tmp_path):
        result = _run(config, command="detect", coloring=str(tmp_path / "absent.col"), targets=["C4"])
        assert result.exit_code == EXIT_ERROR

    def test_parse_error(self, config, tmp_path):
        path = tmp_path / "bad.col"
        path.write_text("3 2\n0 1\n", encoding="utf-8")
        result = _run(config, command="detect", coloring=str(path), targets=["C4"])
        assert result.exit_code == EXIT_ERROR
        assert "line 3" in result.output

    def test_partition(self, config, pentagon_file):
        result = _run(config, command="partition", coloring=pentagon_file, output_format="yaml")
        assert result.exit_code == EXIT_OK
        assert "parts: 5" in result.output

    def test_reduce(self, config, tmp_path):
        path = tmp_path / "rook.col"
        path.write_text(serialize_coloring(rook_coloring(3)), encoding="utf-8")
        result = _run(config, command="reduce", coloring=str(path), targets=["K2,3"], r_value=10)
        assert result.exit_code == EXIT_OK
        assert "REDUCED" in result.output

    def test_construct_prints_a_coloring(self, config):
        result = _run(config, command="construct", construction="paley", param=13, targets=["K3,3"])
        assert result.exit_code == EXIT_OK
        assert result.output.startswith("# K13, 2 colors, rainbow triangle: ABSENT")
        assert parse_coloring(result.output).n == 13

    def test_construct_respects_existing_output(self, config, tmp_path):
        out = str(tmp_path / "layered.col")
        fields = dict(command="construct", construction="layered", targets=["C4"], k=4, out=out)
        assert _run(config, **fields).exit_code == EXIT_OK
        assert _run(config, **fields).exit_code == EXIT_ERROR
        assert _run(config, force=True, **fields).exit_code == EXIT_OK
        with open(out, encoding="utf-8") as f:
            assert parse_coloring(f.read()).n == 7

    def test_bounds(self, config):
        result = _run(config, command="bounds", targets=["K3,3"], k=3)
        assert result.exit_code == EXIT_OK
        assert "lower" in result.output

    def test_dot_with_clusters(self, config, tmp_path):
        path = tmp_path / "layered.col"
        c = layered_lower_bound(pentagon_coloring(), TargetGraph.parse("C4"), 3)
        path.write_text(serialize_coloring(c), encoding="utf-8")
        result = _run(config, command="dot", coloring=str(path), clusters=True)
        assert result.exit_code == EXIT_OK
        assert "subgraph cluster_0" in result.output

    def test_missing_targets(self, config):
        assert _run(config, command="bounds", k=3).exit_code == EXIT_ERROR


class TestSearchAndVerify:

    def test_gallai_ramsey_of_matchings(self, config):
        result = _run(config, command="search", mode="gr", targets=["2P2"], k=3)
        assert result.exit_code == EXIT_OK
        assert result.output == "gr(2P2,2P2,2P2) = 6\n"
        assert len(result.artifacts) == 2

    def test_single_search_over_budget(self, config):
        result = _run(config, command="search", mode="single", targets=["C4"], k=2, n=6, budget=1)
        assert result.exit_code == EXIT_BUDGET
        assert result.artifacts[0].endswith("search-K2_2-K2_2-n6-budget_exceeded.yaml")

    def test_single_search_gallai_flag(self, config):
        fields = dict(command="search", mode="single", targets=["P3"], k=3, n=4)
        assert _run(config, **fields).output.startswith("n=4: EXHAUSTED")
        unrestricted = _run(config, gallai=False, **fields)
        assert unrestricted.exit_code == EXIT_OK
        assert unrestricted.output.startswith("n=4: WITNESS")

    def test_single_search_all_colors_flag(self, config):
        fields = dict(command="search", mode="single", targets=["P3"], k=3, n=2, gallai=False)
        assert _run(config, **fields).output.startswith("n=2: EXHAUSTED")
        assert _run(config, all_colors=False, **fields).output.startswith("n=2: WITNESS")

    def test_verify_refutes(self, config):
        result = _run(config, command="verify", targets=["C4"], k=2, claimed=5)
        assert result.exit_code == EXIT_REFUTED
        assert result.output.startswith("refuted")

    def test_verify_confirms(self, config, tmp_path):
        out = str(tmp_path / "verified")
        result = _run(config, command="verify", targets=["C4"], k=2, claimed=6, out=out)
        assert result.exit_code == EXIT_OK
        assert sorted(os.listdir(out)) == [
            "verify-K2_2-K2_2-n5-witness.yaml",
            "verify-K2_2-K2_2-n6-exhausted.yaml",
        ]

    def test_verify_reduced(self, config):
        result = _run(config, command="verify", reduced=True, targets=["P3"], r_value=3)
        assert result.exit_code == EXIT_OK
        assert "PASS" in result.output

    def test_verify_reduced_over_projection(self, config):
        result = _run(config, command="verify", reduced=True, targets=["C4"], r_value=6, budget=1)
        assert result.exit_code == EXIT_BUDGET
        assert result.output.startswith("infeasible")


class TestEntryPoint:

    @pytest.fixture
    def cli_config(self, tmp_path, monkeypatch):
        monkeypatch.setenv("GALLAI_LOG_DIR", str(tmp_path / "logs"))
        monkeypatch.setenv("GALLAI_CERT_DIR", str(tmp_path / "certs"))
        path = tmp_path / "config.yaml"
        path.write_text("search:\n  threads: 1\n", encoding="utf-8")
        return str(path)

    def test_bounds(self, cli_config, capsys):
        code = app.main(["--config", cli_config, "--quiet", "bounds", "--targets", "K3,3", "--k", "3"])
        assert code == 0
        assert "lower" in capsys.readouterr().out

    def test_saved_job_replays(self, cli_config, tmp_path, capsys):
        job = str(tmp_path / "job.yaml")
        argv = ["--config", cli_config, "--quiet", "--save-job", job, "construct", "matching", "2", "2", "2"]
        assert app.main(argv) == 0
        assert JobConfig.from_yaml((tmp_path / "job.yaml").read_text(encoding="utf-8")).sizes == [2, 2, 2]
        assert app.main(["--config", cli_config, "--quiet", "--job", job]) == 0
        assert parse_coloring(capsys.readouterr().out).n == 5

    def test_no_command(self, cli_config, capsys):
        assert app.main(["--config", cli_config, "--quiet"]) == 1

    def test_run_is_logged(self, cli_config, tmp_path):
        app.main(["--config", cli_config, "--quiet", "bounds", "--targets", "C4", "--k", "3"])
        logs = os.listdir(tmp_path / "logs")
        assert len(logs) == 1
        assert "rainbowless bounds" in (tmp_path / "logs" / logs[0]).read_text(encoding="utf-8")

    def test_saved_job_keeps_existing_file(self, cli_config, tmp_path):
        job = tmp_path / "job.yaml"
        job.write_text("keep\n", encoding="utf-8")
        argv = ["--config", cli_config, "--quiet", "--save-job", str(job), "construct", "matching", "2", "2"]
        assert app.main(argv) == 1
        assert job.read_text(encoding="utf-8") == "keep\n"
        assert app.main(["--force"] + argv) == 0
        assert JobConfig.from_yaml(job.read_text(encoding="utf-8")).sizes == [2, 2]

    def test_gallai_flags_reach_the_job(self, cli_config, tmp_path):
        job = tmp_path / "job.yaml"
        argv = ["--config", cli_config, "--quiet", "--save-job", str(job),
                "search", "single", "--targets", "P3", "--k", "3", "--n", "4", "--no-gallai"]
        assert app.main(argv) == 0
        saved = JobConfig.from_yaml(job.read_text(encoding="utf-8"))
        assert saved.gallai is False
        assert saved.all_colors is None
