"""Shared plumbing: error types, deterministic JSON, grids, ordered fan-out."""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor

SCHEMA_VERSION = 1


class DomainError(ValueError):
    """An argument lies outside the operation's stated domain."""


class UnsupportedError(RuntimeError):
    """The inputs violate a hypothesis the construction requires."""


class RangeError(ValueError):
    """A search ran off the range it is allowed to use."""


class CodingFailure(RuntimeError):
    """Two far-apart orbits received the same section code."""


class StageError(RuntimeError):
    """A certification stage failed; carries the stage name."""

    def __init__(self, stage: str, detail: str = ""):
        self.stage = stage
        self.detail = detail
        super().__init__(f"stage '{stage}' failed" + (f": {detail}" if detail else ""))


def canonical_json(obj) -> str:
    """Stable serialization: equal values always give identical bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dump_json(obj, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(canonical_json(obj))
        fh.write("\n")


def load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def grid(start: float, stop: float, step: float, include_start: bool = True):
    """Evenly spaced floats computed by index to avoid accumulation drift."""
    if step <= 0:
        raise DomainError("grid step must be positive")
    n = int(round((stop - start) / step))
    ts = [start + i * step for i in range(n + 1)]
    if ts and ts[-1] > stop + 1e-12:
        ts.pop()
    if not include_start and ts and ts[0] == start:
        ts.pop(0)
    return ts


def default_workers() -> int:
    return os.cpu_count() or 1


def map_ordered(fn, items, workers: int = 1):
    """Map preserving input order; fans out across threads when workers > 1."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
