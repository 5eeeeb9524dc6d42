"""Structural predicates: induced-star (K_{1,r}) freeness and witnesses.

The search looks for an independent set of size r inside each vertex
neighborhood (neighborhoods are small: max degree n(n-1)); the closed
criterion says G(n, d) is K_{1,r}-free iff d < r or n < r, which breaks
only in the degenerate corner n = r = 1, d >= 1 where the one-vertex
graph is trivially star-free.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ._kernels import get_backend
from .config import DEFAULT, RunConfig
from .errors import DomainError
from .grid_core import BitGraph, ExponentVector, adjacent


@dataclass(frozen=True)
class StarWitness:
    """An induced K_{1,r}: a center adjacent to r pairwise non-adjacent leaves."""

    center: object
    leaves: tuple

    @property
    def r(self) -> int:
        return len(self.leaves)

    def to_json(self) -> str:
        def payload(v):
            return list(v) if isinstance(v, tuple) else v

        return json.dumps(
            {"center": payload(self.center), "leaves": [payload(v) for v in self.leaves]}
        )


def _verify_star(center: ExponentVector, leaves) -> None:
    for leaf in leaves:
        if not adjacent(center, leaf):
            raise AssertionError(f"star center {center} not adjacent to {leaf}")
    for i, a in enumerate(leaves):
        for b in leaves[i + 1 :]:
            if adjacent(a, b):
                raise AssertionError(f"star leaves {a}, {b} are adjacent")


def is_k1r_free(
    g: BitGraph, r: int, config: RunConfig = DEFAULT
) -> tuple[bool, StarWitness | None]:
    """Search-based star-freeness; returns a verified witness when not free."""
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    backend = get_backend(config.backend)
    for v in range(g.n_vertices):
        nbrs = g.neighbors(v)
        if len(nbrs) < r:
            continue
        sub = g.induced_subgraph(g.vertex_set(nbrs))
        mask, _, status = backend.mis_first(
            sub, sub.full_mask, 0, r, config.budget.node_limit,
            config.budget.seconds_limit,
        )
        if status:  # neighborhoods are tiny; a budget hit means a absurd config
            raise DomainError("budget too small for a neighborhood search")
        if mask is None:
            continue
        local = [i for i in range(sub.n_vertices) if (mask >> i) & 1][:r]
        leaves = tuple(sub.label_of(i) for i in local)
        center = g.label_of(v)
        if g.labels is not None:
            _verify_star(center, leaves)
        return False, StarWitness(center, leaves)
    return True, None


def closed_k1r_criterion(n: int, d: int, r: int) -> bool:
    """The closed-form criterion: K_{1,r}-free iff d < r or n < r.

    Degenerate corner: for n = r = 1 and d >= 1 this reports "not free"
    although a one-vertex graph contains no star; callers comparing against
    the search should special-case it (see the acceptance suite).
    """
    return d < r or n < r


def build_star_witness(n: int, d: int, r: int) -> StarWitness:
    """Explicit induced K_{1,r} in G(n, d), verified by adjacency checks.

    Center x1^(d-r+1) * x2 * ... * xr; leaves shift one exponent step
    cyclically.  Requires d >= r and n >= r (no witness exists otherwise);
    for r = 1 the natural one-edge star needs n >= 2.
    """
    if d < r or n < r:
        raise DomainError(
            f"G({n},{d}) is K_(1,{r})-free (d < r or n < r); no witness exists"
        )
    if r == 1:
        if n < 2:
            raise DomainError("a one-vertex graph has no edge to witness K_(1,1)")
        center = ExponentVector([d] + [0] * (n - 1))
        leaf = ExponentVector([d - 1, 1] + [0] * (n - 2))
        witness = StarWitness(center, (leaf,))
        _verify_star(center, witness.leaves)
        return witness
    exps = [0] * n
    exps[0] = d - r + 1
    for i in range(1, r):
        exps[i] = 1
    center = ExponentVector(exps)
    leaves = []
    for i in range(1, r):  # (x_i / x_{i+1}) * center
        shifted = list(center)
        shifted[i - 1] += 1
        shifted[i] -= 1
        leaves.append(ExponentVector(shifted))
    last = list(center)  # (x_r / x_1) * center
    last[r - 1] += 1
    last[0] -= 1
    leaves.append(ExponentVector(last))
    witness = StarWitness(center, tuple(leaves))
    _verify_star(center, witness.leaves)
    return witness


