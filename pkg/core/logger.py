"""
Rainbowless - Dual-Output Logger
===================================
Writes to per-day log files AND echoes to the console.  Used by the
search engine, the reduction verifier and the CLI job runner.

Log files are stored in data/logs/ with filenames like 2026-02-09.log.
Each run starts with a clear separator header.  Console output goes to
stderr so that colorings printed on stdout can be piped.
"""

import os
import sys
from datetime import datetime
from typing import Any, Callable


class RunLogger:
    """
    Dual-output logger: writes to per-day log files AND to the console,
    optionally forwarding structured events to a listener.

    Attributes:
        log_dir:  Directory for log files (data/logs/), or None for console only.
        listener: Callable receiving (event_type, data) for every event.
        quiet:    Suppress console echo (files and listener still receive events).
    """

    def __init__(
        self,
        log_dir: str | None = None,
        listener: Callable[[str, dict], None] | None = None,
        quiet: bool = False,
    ):
        self.log_dir = log_dir
        self.listener = listener
        self.quiet = quiet
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)

    def _get_log_path(self) -> str:
        today = datetime.now().strftime("%Y-%m-%d")
        return os.path.join(self.log_dir, f"{today}.log")

    def _timestamp(self) -> str:
        return datetime.now().strftime("%H:%M:%S")

    def _write(self, text: str) -> None:
        if not self.log_dir:
            return
        try:
            with open(self._get_log_path(), "a", encoding="utf-8") as f:
                f.write(text + "\n")
        except OSError:
            pass

    def _echo(self, text: str) -> None:
        if not self.quiet:
            print(text, file=sys.stderr, flush=True)

    def _emit(self, event_type: str, data: dict) -> None:
        if not self.listener:
            return
        try:
            self.listener(event_type, data)
        except Exception:
            pass

    def _line(self, tag: str, text: str) -> str:
        return f"[{self._timestamp()}] [{tag}] {text}"

    def run_start(self, title: str) -> None:
        now = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        separator = "=" * 50
        header = f"\n{separator}\n{title} | {now}\n{separator}"
        self._write(header)
        self._echo(header)
        self._emit("run", {"event": "started", "title": title})

    def run_end(self, title: str, outcome: str, duration: float) -> None:
        line = self._line("DONE", f"{title} | Outcome: {outcome} | Time: {duration:.2f}s")
        self._write(line)
        self._echo(line)
        self._emit("run", {
            "event": "completed",
            "title": title,
            "outcome": outcome,
            "duration": round(duration, 3),
        })

    def info(self, text: str) -> None:
        line = f"[{self._timestamp()}] {text}"
        self._write(line)
        self._echo(line)
        self._emit("log", {"text": line})

    def tagged(self, tag: str, text: str, **data: Any) -> None:
        line = self._line(tag, text)
        self._write(line)
        self._echo(line)
        self._emit(tag.lower(), {"text": text, **data})

    def progress(self, nodes: int, depth: int, prunes: dict[str, int]) -> None:
        pr = " ".join(f"{k}={v}" for k, v in sorted(prunes.items()))
        line = self._line("PROGRESS", f"nodes={nodes} depth={depth} {pr}")
        self._write(line)
        self._echo(line)
        self._emit("progress", {"nodes": nodes, "depth": depth, "prunes": dict(prunes)})

    def checkpoint(self, path: str, nodes: int) -> None:
        line = self._line("CHECKPOINT", f"{path} (nodes={nodes})")
        self._write(line)
        self._emit("checkpoint", {"path": path, "nodes": nodes})

    def error(self, text: str) -> None:
        line = self._line("ERROR", text)
        self._write(line)
        self._echo(line)
        self._emit("error", {"text": text})
