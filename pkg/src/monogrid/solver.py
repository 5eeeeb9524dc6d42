"""Exact maximum-independent-set solving: value, count, enumeration.

The search itself lives in the kernel backends; this module owns problem
setup (greedy seeds, deterministic work splitting across the worker pool,
budgets) and result packaging.  Counts are exact Python integers.

Parallel runs split the top of the branching tree into a fixed number of
subproblems solved independently and combined by max/sum, so objective,
count and node totals do not depend on the worker count.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from time import monotonic

from ._kernels import get_backend
from .config import DEFAULT, RunConfig
from .errors import CapacityError, EdgeListFormatError
from .grid_core import BitGraph, VertexSet

_BRUTE_FORCE_LIMIT = 25
_SPLIT_MIN_VERTICES = 48
_SPLIT_TASKS = 32
_ALPHA_PROBE_NODES = 300_000


@dataclass(frozen=True)
class SolveReport:
    """Result of one exact computation.

    ``objective`` is the optimum (or the best bound achieved when
    ``exact`` is false, in which case ``budget_exhausted`` names the
    limit that was hit).  ``count`` is the exact number of optimal
    solutions when counting was requested.
    """

    objective: int
    count: int | None
    witnesses: tuple[VertexSet, ...]
    nodes_explored: int
    elapsed: float
    exact: bool
    budget_exhausted: str | None = None
    enumeration_complete: bool | None = None

    def __post_init__(self):
        if not self.exact and self.budget_exhausted is None:
            raise ValueError("inexact report must carry the exhausted budget")


_STATUS_NAMES = {1: "nodes", 2: "time"}


def report_to_json(report: SolveReport, graph: BitGraph) -> str:
    """JSON emission: counts as decimal strings, witnesses as exponent arrays
    (vertex indices when the graph carries no monomial labels)."""

    def witness_payload(vs: VertexSet):
        if graph.labels is not None:
            return [list(graph.labels[v]) for v in vs.sorted()]
        return vs.sorted()

    payload = {
        "objective": report.objective,
        "count": str(report.count) if report.count is not None else None,
        "witnesses": [witness_payload(w) for w in report.witnesses],
        "nodes": report.nodes_explored,
        "elapsed_ms": round(report.elapsed * 1000.0, 3),
        "exact": report.exact,
    }
    if report.budget_exhausted is not None:
        payload["budget_exhausted"] = report.budget_exhausted
    if report.enumeration_complete is not None:
        payload["enumeration_complete"] = report.enumeration_complete
    return json.dumps(payload)


# -- predicates ----------------------------------------------------------


def is_independent(g: BitGraph, s: VertexSet) -> bool:
    """True iff no two members of ``s`` are adjacent in ``g``."""
    g.check_owns(s)
    mask = s.mask()
    rows = g.int_rows
    return all(rows[v] & mask == 0 for v in s.members)


def is_maximal_independent(g: BitGraph, s: VertexSet) -> bool:
    """Independent and not extendable by any vertex."""
    if not is_independent(g, s):
        return False
    mask = s.mask()
    rows = g.int_rows
    for v in range(g.n_vertices):
        if not (mask >> v) & 1 and rows[v] & mask == 0:
            return False
    return True


# -- deterministic seeds and work splitting -------------------------------


def _greedy_independent(rows, p: int) -> tuple[int, int]:
    """Greedy independent set (min residual degree, lowest index on ties)."""
    chosen = 0
    size = 0
    while p:
        pick = -1
        pick_deg = 1 << 62
        m = p
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            deg = (rows[v] & p).bit_count()
            if deg < pick_deg:
                pick_deg = deg
                pick = v
        chosen |= 1 << pick
        size += 1
        p &= ~rows[pick]
        p &= ~(1 << pick)
    return size, chosen


def _split_tasks(rows, full_mask: int, want: int):
    """Expand the top of the branching tree into independent subproblems.

    Returns (tasks, leaves): tasks are (candidate_mask, base_size) pairs
    partitioning the solution space, leaves are base sizes of branches that
    closed during expansion.  The expansion is budget-free and uses the
    kernels' branching rule, so the partition is deterministic and does not
    depend on the worker count.
    """
    queue = deque([(full_mask, 0)])
    leaves = []
    while queue and len(queue) < want:
        p, size = queue.popleft()
        if p == 0:
            leaves.append(size)
            continue
        branch = -1
        branch_deg = -1
        m = p
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            deg = (rows[v] & p).bit_count()
            if deg > branch_deg:
                branch_deg = deg
                branch = v
        bit = 1 << branch
        queue.append((p & ~rows[branch] & ~bit, size + 1))
        queue.append((p & ~bit, size))
    return list(queue), leaves


class _Clock:
    """Shared wall-clock budget for one solve (possibly several kernel calls)."""

    def __init__(self, config: RunConfig):
        self.start = monotonic()
        limit = config.budget.seconds_limit
        self.deadline = self.start + limit if limit != math.inf else math.inf

    def remaining(self) -> float:
        if self.deadline == math.inf:
            return math.inf
        return max(self.deadline - monotonic(), 0.001)

    def elapsed(self) -> float:
        return monotonic() - self.start


def _run_tasks(fn, tasks, threads: int):
    # Results do not depend on the worker count (tasks are independent and
    # reductions commutative), so the pool is capped at the machine size.
    workers = min(threads, len(tasks), os.cpu_count() or 1)
    if workers <= 1:
        return [fn(task) for task in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _merge_status(statuses) -> str | None:
    kinds = {s for s in statuses if s}
    if 1 in kinds:
        return "nodes"
    if 2 in kinds:
        return "time"
    return None


# -- solver entry points ---------------------------------------------------


def _alpha_phase(g: BitGraph, config: RunConfig, clock: _Clock):
    """Exact independence number. Returns (alpha, nodes, budget_kind|None)."""
    backend = get_backend(config.backend)
    rows = g.int_rows
    if g.n_vertices == 0:
        return 0, 0, None
    lb, _ = _greedy_independent(rows, g.full_mask)
    node_limit = config.budget.node_limit

    if g.n_vertices < _SPLIT_MIN_VERTICES:
        best, nodes, status = backend.mis_alpha(
            g, g.full_mask, 0, lb, node_limit, clock.remaining()
        )
        return best, nodes, _STATUS_NAMES.get(status)

    # Serial probe: cheap and usually finds the optimum, giving the split
    # tasks a tight shared lower bound without dynamic coupling.
    probe_limit = _ALPHA_PROBE_NODES
    if 0 <= node_limit < probe_limit:
        probe_limit = node_limit
    best, probe_nodes, probe_status = backend.mis_alpha(
        g, g.full_mask, 0, lb, probe_limit, clock.remaining()
    )
    total_nodes = probe_nodes
    if probe_status == 0:
        return best, total_nodes, None
    if probe_status == 2:
        return best, total_nodes, "time"
    if 0 <= node_limit <= probe_nodes:
        return best, total_nodes, "nodes"

    tasks, leaves = _split_tasks(rows, g.full_mask, _SPLIT_TASKS)
    best = max([best] + leaves)

    def solve(task):
        p, size = task
        return backend.mis_alpha(g, p, size, best, node_limit, clock.remaining())

    results = _run_tasks(solve, tasks, config.threads)
    for value, nodes, _ in results:
        best = max(best, value)
        total_nodes += nodes
    return best, total_nodes, _merge_status(s for _, _, s in results)


def _count_phase(g: BitGraph, target: int, config: RunConfig, clock: _Clock):
    """Exact number of independent sets of size ``target`` (= alpha)."""
    backend = get_backend(config.backend)
    rows = g.int_rows
    node_limit = config.budget.node_limit
    if g.n_vertices == 0:
        return (1 if target == 0 else 0), 0, None
    if g.n_vertices < _SPLIT_MIN_VERTICES:
        count, nodes, status = backend.mis_count(
            g, g.full_mask, 0, target, node_limit, clock.remaining()
        )
        return count, nodes, _STATUS_NAMES.get(status)

    tasks, leaves = _split_tasks(rows, g.full_mask, _SPLIT_TASKS)
    count = sum(1 for size in leaves if size == target)
    total_nodes = 0

    def solve(task):
        p, size = task
        return backend.mis_count(g, p, size, target, node_limit, clock.remaining())

    results = _run_tasks(solve, tasks, config.threads)
    for value, nodes, _ in results:
        count += value
        total_nodes += nodes
    return count, total_nodes, _merge_status(s for _, _, s in results)


def max_independent_set(g: BitGraph, config: RunConfig = DEFAULT) -> SolveReport:
    """Exact independence number with one deterministic witness."""
    _check_solver_capacity(g, config)
    clock = _Clock(config)
    alpha, nodes, budget_kind = _alpha_phase(g, config, clock)
    if budget_kind is not None:
        return SolveReport(alpha, None, (), nodes, clock.elapsed(), False, budget_kind)
    backend = get_backend(config.backend)
    mask, wnodes, wstatus = backend.mis_first(
        g, g.full_mask, 0, alpha, config.budget.node_limit, clock.remaining()
    )
    nodes += wnodes
    if wstatus or mask is None:
        kind = _STATUS_NAMES.get(wstatus, "time")
        return SolveReport(alpha, None, (), nodes, clock.elapsed(), False, kind)
    witness = g.set_from_mask(mask)
    assert len(witness) == alpha
    return SolveReport(alpha, None, (witness,), nodes, clock.elapsed(), True)


def count_maximum_independent_sets(g: BitGraph, config: RunConfig = DEFAULT) -> SolveReport:
    """Exact alpha and the exact number of maximum independent sets."""
    _check_solver_capacity(g, config)
    clock = _Clock(config)
    alpha, nodes, budget_kind = _alpha_phase(g, config, clock)
    if budget_kind is not None:
        return SolveReport(alpha, None, (), nodes, clock.elapsed(), False, budget_kind)
    count, cnodes, budget_kind = _count_phase(g, alpha, config, clock)
    nodes += cnodes
    if budget_kind is not None:
        return SolveReport(alpha, None, (), nodes, clock.elapsed(), False, budget_kind)
    return SolveReport(alpha, count, (), nodes, clock.elapsed(), True)


def enumerate_maximum_independent_sets(
    g: BitGraph, cap: int, config: RunConfig = DEFAULT
) -> SolveReport:
    """Up to ``cap`` maximum independent sets, plus the exact total count.

    When the total is within ``cap`` the list is complete and returned in
    canonical order (sorted by vertex indices); a capped list keeps the
    deterministic discovery order and is flagged incomplete.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    _check_solver_capacity(g, config)
    clock = _Clock(config)
    alpha, nodes, budget_kind = _alpha_phase(g, config, clock)
    if budget_kind is not None:
        return SolveReport(alpha, None, (), nodes, clock.elapsed(), False, budget_kind)
    backend = get_backend(config.backend)
    sols, count, enodes, status = backend.mis_enumerate(
        g, g.full_mask, 0, alpha, cap, config.budget.node_limit, clock.remaining()
    )
    nodes += enodes
    witnesses = [g.set_from_mask(m) for m in sols]
    if status:
        return SolveReport(
            alpha, None, tuple(witnesses), nodes, clock.elapsed(), False,
            _STATUS_NAMES[status], enumeration_complete=False,
        )
    complete = count <= cap
    if complete:
        witnesses.sort(key=lambda w: w.sorted())
    return SolveReport(
        alpha, count, tuple(witnesses), nodes, clock.elapsed(), True,
        enumeration_complete=complete,
    )


def brute_force_alpha(g: BitGraph) -> SolveReport:
    """Oracle: alpha and count by complete unpruned recursion over all
    independent sets.  Hard-limited to 25 vertices; for tests."""
    if g.n_vertices > _BRUTE_FORCE_LIMIT:
        raise CapacityError(
            f"brute force is limited to {_BRUTE_FORCE_LIMIT} vertices, "
            f"got {g.n_vertices}"
        )
    rows = g.int_rows
    start = monotonic()
    state = {"best": 0, "count": 1, "nodes": 0}

    def rec(p: int, size: int):
        state["nodes"] += 1
        if p == 0:
            if size > state["best"]:
                state["best"] = size
                state["count"] = 1
            elif size == state["best"]:
                state["count"] += 1
            return
        low = p & -p
        v = low.bit_length() - 1
        rec(p & ~rows[v] & ~low, size + 1)
        rec(p ^ low, size)

    rec(g.full_mask, 0)
    return SolveReport(
        state["best"], state["count"], (), state["nodes"], monotonic() - start, True
    )


def _check_solver_capacity(g: BitGraph, config: RunConfig):
    if g.n_vertices > config.size_cap:
        raise CapacityError(
            f"{g.tag} has {g.n_vertices} vertices, exceeding the size cap "
            f"of {config.size_cap}"
        )


# -- external graph import -------------------------------------------------


def import_graph(n_vertices: int, edges) -> BitGraph:
    """Solver-ready graph from a simple undirected edge list (0-based)."""
    if n_vertices < 0:
        raise EdgeListFormatError("vertex count must be nonnegative")
    rows = [0] * n_vertices
    seen = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise EdgeListFormatError(f"self-loop at vertex {u}")
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise EdgeListFormatError(f"edge ({u},{v}) out of range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListFormatError(f"duplicate edge ({u},{v})")
        seen.add(key)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    digest = hashlib.blake2b(
        repr(sorted(seen)).encode(), digest_size=6
    ).hexdigest()
    tag = f"edges-{n_vertices}v-{len(seen)}e-{digest}"
    return BitGraph(n_vertices, rows, tag)


def parse_edge_list(text: str) -> BitGraph:
    """Parse the ``p <vertices> <edges>`` / ``e <u> <v>`` (1-based) format."""
    n_vertices = None
    declared_edges = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n_vertices is not None:
                raise EdgeListFormatError(f"line {lineno}: duplicate header")
            try:
                n_vertices, declared_edges = int(parts[-2]), int(parts[-1])
            except (ValueError, IndexError):
                raise EdgeListFormatError(f"line {lineno}: bad header {line!r}")
        elif parts[0] == "e":
            if n_vertices is None:
                raise EdgeListFormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise EdgeListFormatError(f"line {lineno}: bad edge {line!r}")
            u, v = int(parts[1]), int(parts[2])
            edges.append((u - 1, v - 1))
        else:
            raise EdgeListFormatError(f"line {lineno}: unknown record {line!r}")
    if n_vertices is None:
        raise EdgeListFormatError("missing 'p' header line")
    if declared_edges is not None and declared_edges != len(edges):
        raise EdgeListFormatError(
            f"header declares {declared_edges} edges, found {len(edges)}"
        )
    return import_graph(n_vertices, edges)
