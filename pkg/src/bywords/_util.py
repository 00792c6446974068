"""Small shared I/O helpers."""

from __future__ import annotations

import os
from contextlib import contextmanager
from pathlib import Path


@contextmanager
def atomic_writer(path, newline: str = ""):
    """Open ``path`` for writing through a temp file renamed into place on
    success, so a failed write leaves no partial output behind."""
    target = Path(path)
    tmp = target.with_name(target.name + ".part")
    handle = open(tmp, "w", encoding="utf-8", newline=newline)
    try:
        yield handle
    except BaseException:
        handle.close()
        tmp.unlink(missing_ok=True)
        raise
    else:
        handle.close()
        os.replace(tmp, target)
