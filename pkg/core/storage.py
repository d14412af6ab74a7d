"""
Rainbowless - File Storage Helpers
=====================================
Atomic text writes (temp file in the target directory, then rename) so a
crashed run never leaves a half-written certificate or checkpoint.
"""

import os
import tempfile

from core.errors import OutputExists


def atomic_write_text(path: str, text: str, overwrite: bool = True) -> str:
    """
    Write ``text`` to ``path`` atomically and return the absolute path.

    Raises:
        OutputExists: ``path`` exists and ``overwrite`` is False.
    """
    path = os.path.abspath(path)
    if not overwrite and os.path.exists(path):
        raise OutputExists(f"{path} exists (use --force to overwrite)")
    directory = os.path.dirname(path)
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()
