"""Exact domination: domination number, independent domination number,
k-domination checks, and the related bound verifications.

The branch-and-bound search picks the undominated vertex with the fewest
allowed closed-neighborhood candidates and branches on which of them joins
the dominating set; a greedy packing of undominated vertices with disjoint
candidate sets gives the lower bound.  Exact search is gated to desk-scale
graphs (``config.domination_cap`` vertices) unless explicitly overridden.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from time import monotonic

from ._kernels import get_backend
from .config import DEFAULT, RunConfig
from .errors import CapacityError, DomainError
from .grid_core import BitGraph, VertexSet
from .solver import _STATUS_NAMES, is_independent

_ORACLE_LIMIT = 18


@dataclass(frozen=True)
class DominationReport:
    """Result of exact domination solves; absent fields were not requested."""

    gamma: int | None = None
    idom: int | None = None
    gamma_witness: VertexSet | None = None
    idom_witness: VertexSet | None = None
    gamma_exact: bool = True
    idom_exact: bool = True
    budget_exhausted: str | None = None
    nodes_explored: int = 0
    elapsed: float = 0.0

    def __post_init__(self):
        if self.gamma is not None and self.idom is not None:
            if self.gamma_exact and self.idom_exact and self.gamma > self.idom:
                raise AssertionError(
                    f"solver bug: gamma={self.gamma} > i={self.idom}"
                )


def domination_report_to_json(report: DominationReport, graph: BitGraph) -> str:
    def witness_payload(vs):
        if vs is None:
            return None
        if graph.labels is not None:
            return [list(graph.labels[v]) for v in vs.sorted()]
        return vs.sorted()

    payload = {
        "gamma": report.gamma,
        "i": report.idom,
        "gamma_witness": witness_payload(report.gamma_witness),
        "i_witness": witness_payload(report.idom_witness),
        "gamma_exact": report.gamma_exact,
        "i_exact": report.idom_exact,
        "nodes": report.nodes_explored,
        "elapsed_ms": round(report.elapsed * 1000.0, 3),
    }
    if report.budget_exhausted is not None:
        payload["budget_exhausted"] = report.budget_exhausted
    return json.dumps(payload)


# -- predicates -------------------------------------------------------------


def is_k_dominating(g: BitGraph, s: VertexSet, k: int) -> bool:
    """True iff every vertex outside ``s`` has at least ``k`` neighbors in it."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    g.check_owns(s)
    mask = s.mask()
    rows = g.int_rows
    for v in range(g.n_vertices):
        if not (mask >> v) & 1 and (rows[v] & mask).bit_count() < k:
            return False
    return True


def is_dominating(g: BitGraph, s: VertexSet) -> bool:
    return is_k_dominating(g, s, 1)


# -- exact solves ------------------------------------------------------------


def _greedy_dominating(g: BitGraph, independent: bool) -> tuple[int, int]:
    """Deterministic greedy seed: repeatedly take the vertex covering the
    most uncovered (lowest index on ties); independence bans neighbors."""
    rows = g.int_rows
    nv = g.n_vertices
    full = (1 << nv) - 1
    closed = [rows[v] | (1 << v) for v in range(nv)]
    chosen = 0
    banned = 0
    covered = 0
    size = 0
    while covered != full:
        pick = -1
        pick_cover = -1
        for v in range(nv):
            if (banned >> v) & 1 or (chosen >> v) & 1:
                continue
            cover = (closed[v] & ~covered).bit_count()
            if cover > pick_cover:
                pick_cover = cover
                pick = v
        chosen |= 1 << pick
        covered |= closed[pick]
        size += 1
        if independent:
            banned |= rows[pick]
    return size, chosen


def _check_domination_capacity(g: BitGraph, config: RunConfig, allow_large: bool):
    if not allow_large and g.n_vertices > config.domination_cap:
        raise CapacityError(
            f"exact domination is gated to {config.domination_cap} vertices "
            f"({g.tag} has {g.n_vertices}); pass allow_large=True to override"
        )


def _solve_domination(g: BitGraph, independent: bool, config: RunConfig):
    backend = get_backend(config.backend)
    start = monotonic()
    if g.n_vertices == 0:
        return 0, g.vertex_set(()), 1, None, monotonic() - start
    ub, ub_mask = _greedy_dominating(g, independent)
    size, mask, nodes, status = backend.dominating(
        g, independent, ub, ub_mask, config.budget.node_limit,
        config.budget.seconds_limit,
    )
    witness = g.set_from_mask(mask)
    return size, witness, nodes, _STATUS_NAMES.get(status), monotonic() - start


def min_dominating_set(
    g: BitGraph, config: RunConfig = DEFAULT, allow_large: bool = False
) -> DominationReport:
    """Exact domination number with a deterministic witness."""
    _check_domination_capacity(g, config, allow_large)
    size, witness, nodes, budget_kind, elapsed = _solve_domination(g, False, config)
    return DominationReport(
        gamma=size, gamma_witness=witness, gamma_exact=budget_kind is None,
        budget_exhausted=budget_kind, nodes_explored=nodes, elapsed=elapsed,
    )


def min_independent_dominating_set(
    g: BitGraph, config: RunConfig = DEFAULT, allow_large: bool = False
) -> DominationReport:
    """Exact independent domination number with a deterministic witness."""
    _check_domination_capacity(g, config, allow_large)
    size, witness, nodes, budget_kind, elapsed = _solve_domination(g, True, config)
    if budget_kind is None:
        assert is_independent(g, witness) and is_dominating(g, witness)
    return DominationReport(
        idom=size, idom_witness=witness, idom_exact=budget_kind is None,
        budget_exhausted=budget_kind, nodes_explored=nodes, elapsed=elapsed,
    )


def brute_force_domination(g: BitGraph) -> tuple[int, int]:
    """Oracle: (gamma, i) by exhaustive subset scan in increasing size.

    Hard-limited to small graphs; independent of the branch-and-bound path.
    """
    nv = g.n_vertices
    if nv > _ORACLE_LIMIT:
        raise CapacityError(
            f"domination oracle is limited to {_ORACLE_LIMIT} vertices, got {nv}"
        )
    rows = g.int_rows
    closed = [rows[v] | (1 << v) for v in range(nv)]
    full = (1 << nv) - 1
    gamma = None
    idom = None
    for k in range(nv + 1):
        if gamma is not None and idom is not None:
            break
        for subset in combinations(range(nv), k):
            mask = 0
            covered = 0
            for v in subset:
                mask |= 1 << v
                covered |= closed[v]
            if covered != full:
                continue
            if gamma is None:
                gamma = k
            if idom is None and all(rows[v] & mask == 0 for v in subset):
                idom = k
            if gamma is not None and idom is not None:
                break
    assert gamma is not None and idom is not None
    return gamma, idom


# -- closed-form and bound checks -------------------------------------------


def wagon_gamma3(d: int) -> int:
    """Conjectured domination number of the side-d triangular grid,
    floor((d^2 + 7d - 23) / 14); stated for d >= 14 only."""
    if d < 14:
        raise DomainError(f"the formula is stated for d >= 14 only, got d={d}")
    return (d * d + 7 * d - 23) // 14


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of the star-free domination bound i <= gamma*(r-1) - (r-2).

    When the graph is not K_{1,r+1}-free the bound does not apply and the
    report carries the star witness instead (``holds`` is None).
    """

    r: int
    applicable: bool
    star_witness: object | None
    gamma: int | None = None
    idom: int | None = None
    bound: int | None = None
    holds: bool | None = None


def bollobas_cockayne_check(
    g: BitGraph, r: int, config: RunConfig = DEFAULT, allow_large: bool = False
) -> BoundCheck:
    """Verify i <= gamma*(r-1) - (r-2) on a K_{1,r+1}-free graph.

    A False ``holds`` signals a solver bug, not new mathematics.
    """
    from .property_checks import is_k1r_free

    if r < 2:
        raise DomainError(f"the bound needs r >= 2, got {r}")
    free, witness = is_k1r_free(g, r + 1, config)
    if not free:
        return BoundCheck(r=r, applicable=False, star_witness=witness)
    gamma_report = min_dominating_set(g, config, allow_large)
    idom_report = min_independent_dominating_set(g, config, allow_large)
    gamma = gamma_report.gamma
    idom = idom_report.idom
    bound = gamma * (r - 1) - (r - 2)
    return BoundCheck(
        r=r, applicable=True, star_witness=None,
        gamma=gamma, idom=idom, bound=bound, holds=idom <= bound,
    )


@dataclass(frozen=True)
class IGammaCheck:
    """Exact comparison of gamma and i on one graph.

    ``equal=False`` carries the two witnesses as a machine-checkable
    certificate and, where the graph is small enough, an oracle recheck.
    """

    n: int | None
    d: int | None
    gamma: int
    idom: int
    equal: bool
    exact: bool
    gamma_witness: VertexSet | None
    idom_witness: VertexSet | None
    oracle_checked: bool = False
    cross_backend_checked: bool = False


def check_igamma_conjecture(
    g: BitGraph, config: RunConfig = DEFAULT, allow_large: bool = False,
    n: int | None = None, d: int | None = None,
) -> IGammaCheck:
    """Compute gamma and i exactly and compare.

    Any inequality is re-verified before being reported: against the
    exhaustive oracle when the graph is small enough, and against the other
    kernel backend otherwise.
    """
    gamma_report = min_dominating_set(g, config, allow_large)
    idom_report = min_independent_dominating_set(g, config, allow_large)
    exact = gamma_report.gamma_exact and idom_report.idom_exact
    gamma, idom = gamma_report.gamma, idom_report.idom
    equal = gamma == idom
    oracle_checked = False
    cross_checked = False
    if exact and not equal:
        if g.n_vertices <= _ORACLE_LIMIT:
            oracle_gamma, oracle_idom = brute_force_domination(g)
            if (oracle_gamma, oracle_idom) != (gamma, idom):
                raise AssertionError(
                    f"solver disagrees with oracle on {g.tag}: "
                    f"({gamma},{idom}) vs ({oracle_gamma},{oracle_idom})"
                )
            oracle_checked = True
        other = "pure" if get_backend(config.backend).BACKEND_NAME == "cython" else None
        if other is not None:
            from dataclasses import replace

            other_config = replace(config, backend=other)
            g2 = min_dominating_set(g, other_config, allow_large).gamma
            i2 = min_independent_dominating_set(g, other_config, allow_large).idom
            if (g2, i2) != (gamma, idom):
                raise AssertionError(
                    f"kernel backends disagree on {g.tag}: "
                    f"({gamma},{idom}) vs ({g2},{i2})"
                )
            cross_checked = True
    return IGammaCheck(
        n=n, d=d, gamma=gamma, idom=idom, equal=equal, exact=exact,
        gamma_witness=gamma_report.gamma_witness,
        idom_witness=idom_report.idom_witness,
        oracle_checked=oracle_checked,
        cross_backend_checked=cross_checked,
    )
