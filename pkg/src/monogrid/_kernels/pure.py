"""Pure-Python search kernels over int bitmasks.

Reference implementation of the branch-and-bound kernels; the compiled
backend (``_speedups``) mirrors the branching rules, pruning bounds and
node accounting exactly, so both backends return identical objectives,
counts, witnesses and node totals.

Conventions shared by all kernels:

* adjacency comes from ``g.int_rows`` (bit ``v`` of row ``u`` = edge uv);
* candidate sets / solutions travel as Python int bitmasks;
* ``node_limit < 0`` means unlimited; ``seconds`` may be ``math.inf``;
* status codes: 0 = complete, 1 = node budget hit, 2 = time budget hit.

Branching rule (maximum-degree): branch on the candidate vertex of
maximum residual degree, lowest index on ties, include-branch first.
Vertices isolated in the candidate set are forced into the solution
(sound for optimization always, and for counting/enumeration whenever
``target`` equals the independence number, which is how the solvers
call it).  Upper bound: greedy clique cover of the candidate set.
"""

from __future__ import annotations

import math
from time import monotonic

BACKEND_NAME = "pure"

_TIME_CHECK_EVERY = 4096


def _clique_cover(rows, p: int) -> int:
    """Number of cliques in a greedy cover of p; upper bound for alpha(p)."""
    bound = 0
    r = p
    while r:
        v = (r & -r).bit_length() - 1
        r &= r - 1
        cand = rows[v] & r
        while cand:
            u = (cand & -cand).bit_length() - 1
            r &= ~(1 << u)
            cand &= rows[u]
        bound += 1
    return bound


def _scan(rows, p: int):
    """One pass over p: isolated-vertex mask and the branch vertex."""
    iso = 0
    branch = -1
    branch_deg = 0
    m = p
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        deg = (rows[v] & p).bit_count()
        if deg == 0:
            iso |= low
        elif deg > branch_deg:
            branch_deg = deg
            branch = v
    return iso, branch


class _Search:
    __slots__ = ("rows", "nodes", "node_limit", "deadline", "status")

    def __init__(self, rows, node_limit: int, seconds: float):
        self.rows = rows
        self.nodes = 0
        self.node_limit = node_limit
        self.deadline = monotonic() + seconds if seconds != math.inf else math.inf
        self.status = 0

    def tick(self) -> bool:
        """Account one node; True when some budget has been exhausted."""
        self.nodes += 1
        if 0 <= self.node_limit < self.nodes:
            self.status = 1
            return True
        if self.nodes % _TIME_CHECK_EVERY == 0 and monotonic() > self.deadline:
            self.status = 2
            return True
        return False


def mis_alpha(g, p_mask: int, base: int, best: int, node_limit: int, seconds: float):
    """Largest independent set size reachable from (p_mask, base).

    Returns (best, nodes, status); ``best`` only improves on the value
    passed in, so the caller may seed it with any achieved lower bound.
    """
    rows = g.int_rows
    st = _Search(rows, node_limit, seconds)
    best_box = [best]

    def rec(p: int, size: int):
        if st.tick():
            return
        iso, branch = _scan(rows, p)
        if iso:
            size += iso.bit_count()
            p ^= iso
        if p == 0:
            if size > best_box[0]:
                best_box[0] = size
            return
        if size + p.bit_count() <= best_box[0]:
            return
        if size + _clique_cover(rows, p) <= best_box[0]:
            return
        bit = 1 << branch
        rec(p & ~rows[branch] & ~bit, size + 1)
        if st.status:
            return
        rec(p & ~bit, size)

    rec(p_mask, base)
    return best_box[0], st.nodes, st.status


def mis_count(g, p_mask: int, base: int, target: int, node_limit: int, seconds: float):
    """Count independent sets of size exactly ``target`` extending (p_mask, base).

    ``target`` must be the independence number of the full instance the
    subproblem came from (the isolated-vertex forcing relies on it).
    """
    rows = g.int_rows
    st = _Search(rows, node_limit, seconds)
    count_box = [0]

    def rec(p: int, size: int):
        if st.tick():
            return
        iso, branch = _scan(rows, p)
        if iso:
            size += iso.bit_count()
            p ^= iso
        if p == 0:
            if size == target:
                count_box[0] += 1
            return
        if size + p.bit_count() < target:
            return
        if size + _clique_cover(rows, p) < target:
            return
        bit = 1 << branch
        rec(p & ~rows[branch] & ~bit, size + 1)
        if st.status:
            return
        rec(p & ~bit, size)

    rec(p_mask, base)
    return count_box[0], st.nodes, st.status


def mis_enumerate(g, p_mask: int, base_mask: int, target: int, cap: int,
                  node_limit: int, seconds: float):
    """Count and collect (up to ``cap``, in discovery order) the independent
    sets of size ``target`` extending ``base_mask``; same contract as
    :func:`mis_count` otherwise."""
    rows = g.int_rows
    st = _Search(rows, node_limit, seconds)
    sols: list[int] = []
    count_box = [0]

    def rec(p: int, cur: int, size: int):
        if st.tick():
            return
        iso, branch = _scan(rows, p)
        if iso:
            size += iso.bit_count()
            cur |= iso
            p ^= iso
        if p == 0:
            if size == target:
                count_box[0] += 1
                if len(sols) < cap:
                    sols.append(cur)
            return
        if size + p.bit_count() < target:
            return
        if size + _clique_cover(rows, p) < target:
            return
        bit = 1 << branch
        rec(p & ~rows[branch] & ~bit, cur | bit, size + 1)
        if st.status:
            return
        rec(p & ~bit, cur, size)

    rec(p_mask, base_mask, base_mask.bit_count())
    return sols, count_box[0], st.nodes, st.status


def mis_first(g, p_mask: int, base_mask: int, target: int, node_limit: int, seconds: float):
    """First independent set of size >= ``target`` in canonical search order.

    Branches on the lowest-index candidate, include-first, so the solution
    found is the one greedily preferring early vertices.  Returns
    (mask or None, nodes, status); the mask may exceed ``target`` when
    forced vertices overshoot, callers trim.
    """
    rows = g.int_rows
    st = _Search(rows, node_limit, seconds)
    found: list[int | None] = [None]

    def rec(p: int, cur: int, size: int):
        if st.tick():
            return
        iso, _ = _scan(rows, p)
        if iso:
            size += iso.bit_count()
            cur |= iso
            p ^= iso
        if size >= target:
            found[0] = cur
            return
        if p == 0:
            return
        if size + p.bit_count() < target:
            return
        if size + _clique_cover(rows, p) < target:
            return
        low = p & -p
        v = low.bit_length() - 1
        rec(p & ~rows[v] & ~low, cur | low, size + 1)
        if st.status or found[0] is not None:
            return
        rec(p & ~low, cur, size)

    rec(p_mask, base_mask, base_mask.bit_count())
    return found[0], st.nodes, st.status


def dominating(g, independent: bool, best: int, best_mask: int,
               node_limit: int, seconds: float):
    """Minimum (independent) dominating set by branch and bound.

    Branches on which closed-neighborhood member covers the uncovered
    vertex with fewest allowed candidates (lowest index on ties);
    candidates are tried in index order and banned from later branches.
    Lower bound: greedy packing of uncovered vertices with pairwise
    disjoint candidate sets.  ``best``/``best_mask`` must be an achieved
    upper bound (e.g. from a greedy pass).
    """
    rows = g.int_rows
    nv = g.n_vertices
    full = (1 << nv) - 1
    closed = [rows[v] | (1 << v) for v in range(nv)]
    st = _Search(rows, node_limit, seconds)
    box = [best, best_mask]

    def rec(size: int, chosen: int, banned: int, covered: int):
        if st.tick():
            return
        if covered == full:
            if size < box[0]:
                box[0] = size
                box[1] = chosen
            return
        if size + 1 >= box[0]:
            return
        uncovered = full & ~covered
        pick = -1
        pick_count = nv + 1
        m = uncovered
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            c = (closed[u] & ~banned).bit_count()
            if c == 0:
                return
            if c < pick_count:
                pick_count = c
                pick = u
        lb = 0
        blocked = 0
        m = uncovered
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            cu = closed[u] & ~banned
            if cu & blocked == 0:
                lb += 1
                blocked |= cu
        if size + lb >= box[0]:
            return
        cand = closed[pick] & ~banned
        ban_iter = banned
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            new_banned = ban_iter | low
            if independent:
                new_banned |= rows[w]
            rec(size + 1, chosen | low, new_banned, covered | closed[w])
            if st.status:
                return
            ban_iter |= low
        return

    rec(0, 0, 0, 0)
    return box[0], box[1], st.nodes, st.status
