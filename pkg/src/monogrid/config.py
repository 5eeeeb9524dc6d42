"""Run configuration: worker counts, budgets, size caps, cache location.

Environment variables: MONOGRID_THREADS overrides the worker count,
MONOGRID_CACHE the sequence-cache path, MONOGRID_BACKEND the search
kernel backend ("cython" or "pure").
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace


DEFAULT_SIZE_CAP = 100_000
DEFAULT_DOMINATION_CAP = 120


def default_threads() -> int:
    env = os.environ.get("MONOGRID_THREADS")
    if env:
        value = int(env)
        if value < 1:
            raise ValueError("MONOGRID_THREADS must be >= 1")
        return value
    return os.cpu_count() or 1


def default_cache_path() -> str:
    return os.environ.get("MONOGRID_CACHE", "monogrid_cache.jsonl")


@dataclass(frozen=True)
class Budget:
    """Limits for one exact search.

    ``max_nodes`` applies to each search task (tasks run per worker when the
    top of the branching tree is split); ``max_seconds`` is a shared
    wall-clock limit for the whole solve. ``None`` means unlimited.
    """

    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")

    @property
    def node_limit(self) -> int:
        return self.max_nodes if self.max_nodes is not None else -1

    @property
    def seconds_limit(self) -> float:
        return self.max_seconds if self.max_seconds is not None else math.inf


UNLIMITED = Budget()


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the solvers and the CLI."""

    threads: int = field(default_factory=default_threads)
    size_cap: int = DEFAULT_SIZE_CAP
    domination_cap: int = DEFAULT_DOMINATION_CAP
    budget: Budget = UNLIMITED
    cache_path: str = field(default_factory=default_cache_path)
    backend: str | None = None  # None = auto (compiled if available)

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.size_cap < 1:
            raise ValueError("size_cap must be >= 1")

    def with_budget(self, max_nodes=None, max_seconds=None) -> "RunConfig":
        return replace(self, budget=Budget(max_nodes, max_seconds))


DEFAULT = RunConfig()
