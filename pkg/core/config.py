"""
Rainbowless - Configuration Manager
======================================
Handles loading and saving of application configuration from two sources:

1. config.yaml  - Search budgets, thread counts, output paths, corpus sizes
2. .env         - Per-machine environment overrides (GALLAI_* variables)

Precedence is environment > config.yaml > DEFAULTS, so a long-running
search can be re-tuned on one machine without touching the shared file.

Usage:
    config = ConfigManager(project_dir="/path/to/rainbowless")
    settings = config.load()                      # merged config dict
    config.update({"search": {"threads": 4}})     # writes config.yaml
"""

import copy
import os
import yaml
from dotenv import dotenv_values
from typing import Any, Callable


# Default configuration values used when config.yaml is missing or incomplete.
DEFAULTS = {
    "search": {
        "budget": 10**9,
        "threads": 1,
        "split_depth": 4,
        "checkpoint_every": 1_000_000,
        "progress_every": 250_000,
        "canonicity": "full",
        "canonicity_node_threshold": 50_000_000,
        "max_n": 12,
    },
    "reduction": {
        "budget": 10**9,
        "probes": 64,
    },
    "limits": {
        "max_vertices": 64,
    },
    "output": {
        "data_dir": "data",
        "log_dir": "data/logs",
        "certificate_dir": "data/certificates",
        "overwrite": False,
    },
    "corpus": {
        "seed": 20170101,
        "substitution": 200,
        "repaired": 100,
        "max_order": 15,
        "max_colors": 5,
    },
}

PATH_KEYS = ("data_dir", "log_dir", "certificate_dir")

# Environment variables that override single config keys.
# name -> (section, key, parser)
ENV_OVERRIDES: dict[str, tuple[str, str, Callable[[str], Any]]] = {
    "GALLAI_BUDGET": ("search", "budget", int),
    "GALLAI_THREADS": ("search", "threads", int),
    "GALLAI_SPLIT_DEPTH": ("search", "split_depth", int),
    "GALLAI_CANONICITY": ("search", "canonicity", str),
    "GALLAI_MAX_N": ("search", "max_n", int),
    "GALLAI_REDUCTION_BUDGET": ("reduction", "budget", int),
    "GALLAI_DATA_DIR": ("output", "data_dir", str),
    "GALLAI_LOG_DIR": ("output", "log_dir", str),
    "GALLAI_CERT_DIR": ("output", "certificate_dir", str),
}


class ConfigManager:
    """
    Merged view of DEFAULTS, config.yaml and GALLAI_* overrides.

    Attributes:
        project_dir: Directory relative output paths resolve against.
        config_path: The YAML settings file.
        env_path:    The per-machine .env file.
    """

    def __init__(self, project_dir: str, config_path: str | None = None):
        self.project_dir = project_dir
        self.config_path = config_path or os.path.join(project_dir, "config.yaml")
        self.env_path = os.path.join(project_dir, ".env")

    def load(self) -> dict:
        """
        Settings with every layer applied and output paths made absolute.

        A config.yaml that cannot be parsed leaves the defaults in place and
        sets ``_config_error``; bad override values collect in ``_env_errors``.
        """
        config = copy.deepcopy(DEFAULTS)
        try:
            _merge_into(config, self._read_file())
        except (yaml.YAMLError, OSError, TypeError) as e:
            config["_config_error"] = str(e)

        _apply_env_overrides(config, self._environment())

        output = config["output"]
        for key in PATH_KEYS:
            if not os.path.isabs(output[key]):
                output[key] = os.path.join(self.project_dir, output[key])
        return config

    def save(self, config: dict) -> None:
        """Write the known sections back, dropping ``_``-prefixed keys."""
        sections = {
            name: {key: value for key, value in config[name].items() if not str(key).startswith("_")}
            for name in DEFAULTS
            if name in config
        }
        with open(self.config_path, "w", encoding="utf-8") as f:
            yaml.safe_dump(sections, f, default_flow_style=False, sort_keys=False)

    def update(self, updates: dict) -> dict:
        """Merge a partial dict into config.yaml and return the reloaded settings."""
        config = copy.deepcopy(DEFAULTS)
        try:
            _merge_into(config, self._read_file())
        except (yaml.YAMLError, OSError, TypeError):
            pass
        _merge_into(config, updates)
        self.save(config)
        return self.load()

    def _read_file(self) -> dict:
        if not os.path.exists(self.config_path):
            return {}
        with open(self.config_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise TypeError(f"{self.config_path} must hold a mapping, got {type(data).__name__}")
        return data

    def _environment(self) -> dict[str, str]:
        """.env values with the live process environment on top."""
        env: dict[str, str] = {}
        if os.path.exists(self.env_path):
            env.update({k: v for k, v in dotenv_values(self.env_path).items() if v is not None})
        env.update({k: v for k, v in os.environ.items() if k in ENV_OVERRIDES})
        return env


# -- Helper Functions ---------------------------------------------------------

def _apply_env_overrides(config: dict, env: dict[str, str]) -> None:
    for name, (section, key, parse) in ENV_OVERRIDES.items():
        raw = env.get(name)
        if not raw:
            continue
        try:
            config[section][key] = parse(raw)
        except ValueError:
            config.setdefault("_env_errors", []).append(f"{name}={raw!r}")


def _merge_into(target: dict, layer: dict) -> None:
    """Nested dicts merge key by key; any other value replaces the old one."""
    for key, value in layer.items():
        current = target.get(key)
        if isinstance(current, dict) and isinstance(value, dict):
            _merge_into(current, value)
        else:
            target[key] = value
