"""
Tests for the configuration layer, the run logger and atomic storage.
"""

import os

import pytest
import yaml

from core.config import DEFAULTS, ENV_OVERRIDES, ConfigManager
from core.errors import OutputExists
from core.logger import RunLogger
from core.storage import atomic_write_text, read_text


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ENV_OVERRIDES:
        monkeypatch.delenv(name, raising=False)


class TestConfigManager:

    def test_defaults_without_file(self, tmp_path):
        config = ConfigManager(str(tmp_path)).load()
        assert config["search"]["budget"] == DEFAULTS["search"]["budget"]
        assert config["output"]["log_dir"] == os.path.join(str(tmp_path), "data/logs")

    def test_file_values_merge_over_defaults(self, tmp_path):
        (tmp_path / "config.yaml").write_text("search:\n  threads: 3\n", encoding="utf-8")
        config = ConfigManager(str(tmp_path)).load()
        assert config["search"]["threads"] == 3
        assert config["search"]["split_depth"] == DEFAULTS["search"]["split_depth"]

    def test_environment_wins(self, tmp_path, monkeypatch):
        (tmp_path / "config.yaml").write_text("search:\n  threads: 3\n", encoding="utf-8")
        monkeypatch.setenv("GALLAI_THREADS", "5")
        assert ConfigManager(str(tmp_path)).load()["search"]["threads"] == 5

    def test_dotenv_file(self, tmp_path):
        (tmp_path / ".env").write_text("GALLAI_BUDGET=77\n", encoding="utf-8")
        assert ConfigManager(str(tmp_path)).load()["search"]["budget"] == 77

    def test_process_environment_beats_dotenv(self, tmp_path, monkeypatch):
        (tmp_path / ".env").write_text("GALLAI_BUDGET=77\n", encoding="utf-8")
        monkeypatch.setenv("GALLAI_BUDGET", "88")
        assert ConfigManager(str(tmp_path)).load()["search"]["budget"] == 88

    def test_bad_environment_value_is_reported(self, tmp_path, monkeypatch):
        monkeypatch.setenv("GALLAI_MAX_N", "twelve")
        config = ConfigManager(str(tmp_path)).load()
        assert config["search"]["max_n"] == DEFAULTS["search"]["max_n"]
        assert config["_env_errors"] == ["GALLAI_MAX_N='twelve'"]

    def test_absolute_paths_are_kept(self, tmp_path, monkeypatch):
        logs = str(tmp_path / "elsewhere")
        monkeypatch.setenv("GALLAI_LOG_DIR", logs)
        assert ConfigManager(str(tmp_path)).load()["output"]["log_dir"] == logs

    def test_corrupted_file(self, tmp_path):
        (tmp_path / "config.yaml").write_text("search: [unclosed\n", encoding="utf-8")
        config = ConfigManager(str(tmp_path)).load()
        assert "_config_error" in config
        assert config["search"] == DEFAULTS["search"]

    def test_update_writes_file(self, tmp_path):
        manager = ConfigManager(str(tmp_path))
        config = manager.update({"search": {"split_depth": 2}, "_scratch": 1})
        assert config["search"]["split_depth"] == 2
        with open(manager.config_path, encoding="utf-8") as f:
            saved = yaml.safe_load(f)
        assert saved["search"]["split_depth"] == 2
        assert "_scratch" not in saved

    def test_example_file_matches_defaults(self):
        root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        with open(os.path.join(root, "config.yaml.example"), encoding="utf-8") as f:
            example = yaml.safe_load(f)
        assert example == DEFAULTS


class TestRunLogger:

    def test_file_and_listener(self, tmp_path):
        events = []
        logger = RunLogger(log_dir=str(tmp_path), listener=lambda kind, data: events.append((kind, data)), quiet=True)
        logger.tagged("WITNESS", "n=5", nodes=12)
        assert events == [("witness", {"text": "n=5", "nodes": 12})]
        (log_file,) = os.listdir(tmp_path)
        assert "[WITNESS] n=5" in (tmp_path / log_file).read_text(encoding="utf-8")

    def test_console_goes_to_stderr(self, capsys):
        RunLogger().error("boom")
        captured = capsys.readouterr()
        assert "[ERROR] boom" in captured.err
        assert captured.out == ""

    def test_quiet(self, capsys):
        RunLogger(quiet=True).info("hidden")
        assert capsys.readouterr().err == ""

    def test_listener_failures_are_swallowed(self):
        def explode(kind, data):
            raise RuntimeError(kind)

        RunLogger(listener=explode, quiet=True).progress(10, 3, {"target": 2})

    def test_run_boundaries(self, tmp_path):
        events = []
        logger = RunLogger(log_dir=str(tmp_path), listener=lambda kind, data: events.append(data), quiet=True)
        logger.run_start("search n=6")
        logger.run_end("search n=6", "EXHAUSTED", 1.5)
        assert [e["event"] for e in events] == ["started", "completed"]
        assert events[1]["duration"] == 1.5


class TestStorage:

    def test_atomic_write(self, tmp_path):
        path = str(tmp_path / "nested" / "out.txt")
        assert atomic_write_text(path, "first") == path
        assert read_text(path) == "first"
        with pytest.raises(OutputExists):
            atomic_write_text(path, "second", overwrite=False)
        atomic_write_text(path, "second")
        assert read_text(path) == "second"
        assert os.listdir(tmp_path / "nested") == ["out.txt"]
