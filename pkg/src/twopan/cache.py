"""On-disk cache of t(0..N-1) so long tables resume across runs.

Format (text, canonical):

    # twopan t-cache
    format 1
    generator <package version>
    sha256 <hex digest of the body lines>
    0 1
    1 1
    ...

A cache that fails any check is ignored with a warning.
"""
from __future__ import annotations

import hashlib
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Sequence

FORMAT_VERSION = 1
MAGIC = "# twopan t-cache"

log = logging.getLogger(__name__)


def _generator() -> str:
    from . import __version__

    return __version__


def render(values: Sequence[int]) -> str:
    body = "".join(f"{n} {v}\n" for n, v in enumerate(values))
    digest = hashlib.sha256(body.encode()).hexdigest()
    head = f"{MAGIC}\nformat {FORMAT_VERSION}\ngenerator {_generator()}\nsha256 {digest}\n"
    return head + body


def parse(text: str) -> list[int]:
    lines = text.split("\n")
    if len(lines) < 5 or lines[0] != MAGIC:
        raise ValueError("missing cache header")
    if lines[1] != f"format {FORMAT_VERSION}":
        raise ValueError(f"unsupported cache format: {lines[1]!r}")
    if lines[2] != f"generator {_generator()}":
        raise ValueError(f"cache written by another version: {lines[2]!r}")
    if not lines[3].startswith("sha256 "):
        raise ValueError("missing checksum")
    body = "\n".join(lines[4:])
    if hashlib.sha256(body.encode()).hexdigest() != lines[3][7:]:
        raise ValueError("checksum mismatch")
    values = []
    for i, line in enumerate(lines[4:-1]):
        n, v = line.split(" ")
        if int(n) != i:
            raise ValueError(f"entry {i} is labelled {n}")
        values.append(int(v))
    if lines[-1] != "":
        raise ValueError("truncated cache")
    return values


def load(path: Path) -> Optional[list[int]]:
    """Cached values, or None when the file is absent or untrustworthy."""
    path = Path(path)
    if not path.exists():
        return None
    try:
        return parse(path.read_text())
    except (OSError, ValueError, UnicodeDecodeError) as exc:
        log.warning("ignoring cache %s: %s", path, exc)
        return None


def save(path: Path, values: Sequence[int]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(render(values))
    os.replace(tmp, path)
