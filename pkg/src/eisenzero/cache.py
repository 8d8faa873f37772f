"""Flat-file evaluation cache for the CLI.

Append-only JSON-lines file mapping rounded evaluation keys to complex
values; loaded into an in-memory MemoCache (single-writer, multi-reader)
and installed into the completed-zeta layer. Disabled unless --cache is
given; location from EISENZERO_CACHE_DIR (default: cwd)."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .zeta import MemoCache

CACHE_ENV = "EISENZERO_CACHE_DIR"
CACHE_FILENAME = "eisenzero-cache.jsonl"


def cache_path() -> Path:
    base = os.environ.get(CACHE_ENV, ".")
    return Path(base) / CACHE_FILENAME


def load_cache(path: Path | None = None) -> tuple[MemoCache, set]:
    """Read the cache file into a MemoCache; returns (memo, known_keys)."""
    path = path or cache_path()
    memo = MemoCache()
    known = set()
    if path.exists():
        with path.open("r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    key = (obj["tag"], obj["re"], obj["im"])
                    memo.put(key, complex(obj["vre"], obj["vim"]))
                    known.add(key)
                except (KeyError, ValueError, json.JSONDecodeError):
                    continue  # tolerate partial trailing writes
    return memo, known


def append_new_entries(memo: MemoCache, known: set, path: Path | None = None) -> int:
    """Append entries added since load; returns the number written."""
    path = path or cache_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    wrote = 0
    with path.open("a", encoding="utf-8") as fh:
        for key, val in memo._data.items():
            if key in known:
                continue
            tag, re, im = key
            fh.write(json.dumps({"tag": tag, "re": re, "im": im,
                                 "vre": val.real, "vim": val.imag}) + "\n")
            wrote += 1
    return wrote
