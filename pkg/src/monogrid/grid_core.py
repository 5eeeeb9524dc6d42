"""Monomial grid graphs.

Vertices of ``G(n, d)`` are the degree-``d`` monomials in ``n`` variables,
represented as exponent vectors (n-tuples of nonnegative integers summing
to ``d``).  Two monomials are adjacent when the degree of their lcm is
``d + 1``, equivalently when their exponent vectors are at L1 distance 2.

Graphs are immutable after construction; adjacency is stored as dense bit
rows (one fixed-width row of uint64 words per vertex) shared by the pure
and compiled search kernels.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config import DEFAULT_SIZE_CAP
from .errors import (
    CapacityError,
    DomainError,
    GraphIdentityError,
    ShapeMismatchError,
)


class ExponentVector(tuple):
    """Exponent vector of one monomial: nonnegative integers, one per variable."""

    __slots__ = ()

    def __new__(cls, exps):
        exps = tuple(int(e) for e in exps)
        if not exps:
            raise ValueError("an exponent vector needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def d(self) -> int:
        return sum(self)

    def monomial(self) -> str:
        """Human-readable monomial, e.g. ``x1^2*x3``; ``1`` for degree 0."""
        parts = []
        for i, e in enumerate(self, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def line(self) -> str:
        """Space-separated exponent form used by the plain-text vertex format."""
        return " ".join(str(e) for e in self)

    def __repr__(self):
        return f"ExponentVector({tuple(self)})"


def parse_exponent_line(line: str) -> ExponentVector:
    return ExponentVector(int(tok) for tok in line.split())


def parse_exponent_lines(text: str) -> list[ExponentVector]:
    """Parse the one-monomial-per-line exponent format, skipping blanks."""
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(parse_exponent_line(line))
    return out


def format_exponent_lines(vectors) -> str:
    return "\n".join(v.line() for v in vectors) + "\n"


def monomial_count(n: int, d: int) -> int:
    """Number of degree-d monomials in n variables."""
    return math.comb(n + d - 1, n - 1)


def enumerate_monomials(n: int, d: int, size_cap: int = DEFAULT_SIZE_CAP) -> list[ExponentVector]:
    """All exponent vectors of degree ``d`` in ``n`` variables.

    Canonical order: lexicographically decreasing (x1-major), which keeps
    slice blocks contiguous and figures reproducible.
    """
    if n < 1:
        raise DomainError(f"need at least one variable, got n={n}")
    if d < 0:
        raise DomainError(f"degree must be nonnegative, got d={d}")
    total = monomial_count(n, d)
    if total > size_cap:
        raise CapacityError(
            f"G({n},{d}) has {total} vertices, exceeding the size cap of {size_cap}"
        )
    out: list[ExponentVector] = []
    prefix = [0] * n

    def descend(pos: int, remaining: int):
        if pos == n - 1:
            prefix[pos] = remaining
            out.append(ExponentVector(prefix))
            return
        for e in range(remaining, -1, -1):
            prefix[pos] = e
            descend(pos + 1, remaining - e)

    descend(0, d)
    return out


def _check_same_family(f: ExponentVector, g: ExponentVector):
    if f.n != g.n:
        raise ShapeMismatchError(f"variable counts differ: {f.n} vs {g.n}")
    if f.d != g.d:
        raise ShapeMismatchError(f"degrees differ: {f.d} vs {g.d}")


def l1_distance(f, g) -> int:
    return sum(abs(a - b) for a, b in zip(f, g))


def lcm_degree(f, g) -> int:
    return sum(max(a, b) for a, b in zip(f, g))


def adjacent(f: ExponentVector, g: ExponentVector) -> bool:
    """True iff deg(lcm(f, g)) = d + 1, equivalently L1(f, g) = 2.

    Both criteria are evaluated; a disagreement would be an internal bug.
    """
    _check_same_family(f, g)
    by_lcm = lcm_degree(f, g) == f.d + 1
    by_l1 = l1_distance(f, g) == 2
    if by_lcm != by_l1:  # pragma: no cover - mathematically impossible
        raise AssertionError(f"adjacency criteria disagree on {f}, {g}")
    return by_l1


@dataclass(frozen=True)
class VertexSet:
    """A subset of vertex indices of one specific graph.

    The ``graph_tag`` records provenance so a set cannot silently be used
    with a different graph.
    """

    graph_tag: str
    members: frozenset[int]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, v):
        return v in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m


def _mask_to_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class BitGraph:
    """Immutable undirected graph with dense bit-row adjacency.

    ``labels``, when present, gives one :class:`ExponentVector` per vertex
    (kept by induced subgraphs so results can always be reported as
    monomials).
    """

    def __init__(self, n_vertices: int, int_rows: list[int], tag: str, labels=None):
        self.n_vertices = n_vertices
        self.tag = tag
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n_vertices:
            raise ValueError("label count does not match vertex count")
        self._int_rows = list(int_rows)
        self.words = max(1, (n_vertices + 63) // 64)
        buf = bytearray()
        for row in self._int_rows:
            buf += row.to_bytes(self.words * 8, "little")
        arr = np.frombuffer(bytes(buf), dtype=np.uint64).reshape(
            n_vertices if n_vertices else 0, self.words
        )
        self.adjacency = arr.copy()
        self.adjacency.flags.writeable = False

    # -- basic queries -------------------------------------------------

    @property
    def int_rows(self) -> list[int]:
        """Adjacency rows as Python int bitmasks (bit v = vertex v)."""
        return self._int_rows

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._int_rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._int_rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _mask_to_indices(self._int_rows[v])

    @cached_property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._int_rows) // 2

    def edges(self):
        for u in range(self.n_vertices):
            row = self._int_rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    @property
    def full_mask(self) -> int:
        return (1 << self.n_vertices) - 1

    def label_of(self, v: int):
        return self.labels[v] if self.labels is not None else v

    # -- vertex sets -----------------------------------------------------

    def vertex_set(self, indices) -> VertexSet:
        members = frozenset(int(v) for v in indices)
        for v in members:
            if not (0 <= v < self.n_vertices):
                raise GraphIdentityError(
                    f"vertex index {v} out of range for {self.tag} "
                    f"({self.n_vertices} vertices)"
                )
        return VertexSet(self.tag, members)

    def all_vertices(self) -> VertexSet:
        return VertexSet(self.tag, frozenset(range(self.n_vertices)))

    def check_owns(self, s: VertexSet):
        if s.graph_tag != self.tag:
            raise GraphIdentityError(
                f"vertex set belongs to {s.graph_tag!r}, not {self.tag!r}"
            )

    def set_from_mask(self, mask: int) -> VertexSet:
        return self.vertex_set(_mask_to_indices(mask))

    # -- derived graphs ---------------------------------------------------

    def _sub_tag(self, kept: tuple[int, ...]) -> str:
        digest = hashlib.blake2b(
            (",".join(map(str, kept))).encode(), digest_size=6
        ).hexdigest()
        return f"{self.tag}|sub-{digest}"

    def induced_subgraph(self, s: VertexSet) -> "BitGraph":
        """Graph restricted to ``s``; vertex order inherited from this graph."""
        self.check_owns(s)
        kept = tuple(sorted(s.members))
        pos = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            row = 0
            for u in _mask_to_indices(self._int_rows[v]):
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        labels = [self.labels[v] for v in kept] if self.labels is not None else None
        sub = BitGraph(len(kept), rows, self._sub_tag(kept), labels)
        sub.parent_indices = kept
        return sub

    def delete_vertices(self, s: VertexSet) -> "BitGraph":
        """Graph induced on the complement of ``s``."""
        self.check_owns(s)
        rest = [v for v in range(self.n_vertices) if v not in s.members]
        return self.induced_subgraph(self.vertex_set(rest))

    def __repr__(self):
        return f"<{type(self).__name__} {self.tag}: {self.n_vertices} vertices, {self.edge_count} edges>"


class MonomialGraph(BitGraph):
    """The graph G(n, d) over all degree-d monomials in n variables."""

    def __init__(self, n: int, d: int, size_cap: int = DEFAULT_SIZE_CAP):
        self.n = n
        self.d = d
        vertices = enumerate_monomials(n, d, size_cap)
        self.vertices = vertices
        self.index_of = {v: i for i, v in enumerate(vertices)}
        nv = len(vertices)
        rows = [0] * nv
        for i, f in enumerate(vertices):
            for src in range(n):
                if f[src] == 0:
                    continue
                for dst in range(n):
                    if dst == src:
                        continue
                    g = list(f)
                    g[src] -= 1
                    g[dst] += 1
                    j = self.index_of[ExponentVector(g)]
                    rows[i] |= 1 << j
        super().__init__(nv, rows, f"G({n},{d})", labels=vertices)

    def index(self, vec) -> int:
        vec = vec if isinstance(vec, ExponentVector) else ExponentVector(vec)
        if vec.n != self.n or vec.d != self.d:
            raise ShapeMismatchError(
                f"{tuple(vec)} is not a vertex family member of G({self.n},{self.d})"
            )
        return self.index_of[vec]

    def vertex_set_of(self, vectors) -> VertexSet:
        return self.vertex_set(self.index(v) for v in vectors)


def build_graph(n: int, d: int, size_cap: int = DEFAULT_SIZE_CAP) -> MonomialGraph:
    """Construct G(n, d) in canonical vertex order (deterministic)."""
    return MonomialGraph(n, d, size_cap)


@dataclass(frozen=True)
class Slice:
    """One slice of a graph: the vertices with a fixed exponent of one variable.

    ``relabel[i]`` maps vertex ``i`` of ``subgraph`` to the corresponding
    vertex index of the canonical ``G(n-1, d-e)`` obtained by deleting the
    sliced coordinate.
    """

    vertex_set: VertexSet
    subgraph: BitGraph
    relabel: tuple[int, ...]
    var: int
    exponent: int


def slice_graph(g: MonomialGraph, var: int, e: int) -> Slice:
    """Split off the slice ``{exps[var] = e}`` of ``g``.

    ``var`` is 1-based.  The induced subgraph is isomorphic to
    ``G(n-1, d-e)`` via deletion of the sliced coordinate; the returned
    relabeling is that isomorphism.
    """
    if not 1 <= var <= g.n:
        raise IndexError(f"variable index {var} out of range 1..{g.n}")
    if not 0 <= e <= g.d:
        raise IndexError(f"exponent {e} out of range 0..{g.d}")
    if g.n < 2:
        raise DomainError("slicing needs at least two variables")
    idx = var - 1
    members = [i for i, v in enumerate(g.vertices) if v[idx] == e]
    vs = g.vertex_set(members)
    sub = g.induced_subgraph(vs)
    target = enumerate_monomials(g.n - 1, g.d - e)
    target_index = {v: i for i, v in enumerate(target)}
    relabel = []
    for i in members:
        vec = g.vertices[i]
        reduced = ExponentVector(vec[:idx] + vec[idx + 1 :])
        relabel.append(target_index[reduced])
    return Slice(vs, sub, tuple(relabel), var, e)


@dataclass(frozen=True)
class RimLayer:
    """One concentric layer of a triangular grid graph.

    ``walk`` lists the layer's vertices in cyclic order; consecutive walk
    entries (and the closing pair) are adjacent, so the layer carries a
    spanning cycle of length ``cycle_length``.  The induced subgraph may
    additionally contain one chord next to each corner; it is *not* in
    general an induced cycle.  ``degenerate`` marks the single-vertex layer
    standing in for the cycle of length 0.
    """

    index: int
    vertex_set: VertexSet
    walk: tuple[int, ...]
    cycle_length: int
    degenerate: bool


def rim_cycle_decomposition(g: MonomialGraph) -> list[RimLayer]:
    """Partition G(3, a) into concentric layers by minimum exponent.

    Layer ``i`` holds the vertices whose minimum exponent is exactly ``i``
    and carries a spanning cycle of length ``3a - 9i`` (an isolated vertex
    when that length is 0).
    """
    if g.n != 3:
        raise DomainError(f"rim decomposition is defined for n=3, got n={g.n}")
    a = g.d
    layers = []
    for i in range(a // 3 + 1):
        m = a - 3 * i
        if m == 0:
            vec = ExponentVector((i, i, i))
            v = g.index(vec)
            layers.append(RimLayer(i, g.vertex_set([v]), (v,), 0, True))
            continue
        walk_vectors = []
        for t in range(m):
            walk_vectors.append((m - t + i, t + i, i))
        for t in range(m):
            walk_vectors.append((i, m - t + i, t + i))
        for t in range(m):
            walk_vectors.append((t + i, i, m - t + i))
        walk = tuple(g.index(ExponentVector(v)) for v in walk_vectors)
        layers.append(
            RimLayer(i, g.vertex_set(walk), walk, 3 * m, False)
        )
    return layers


# -- export formats ------------------------------------------------------


def dot_export(g: BitGraph, highlight: VertexSet | None = None) -> str:
    """GraphViz DOT text; highlighted vertices are filled red."""
    if highlight is not None:
        g.check_owns(highlight)
    lines = ["graph monogrid {", "  node [shape=circle];"]
    for v in range(g.n_vertices):
        label = g.labels[v].monomial() if g.labels is not None else str(v)
        attrs = [f'label="{label}"']
        if highlight is not None and v in highlight:
            attrs.append('style=filled, fillcolor="red"')
        lines.append(f"  v{v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def edge_list_export(g: BitGraph) -> str:
    """DIMACS-style edge list: ``p <vertices> <edges>`` then ``e <u> <v>`` (1-based)."""
    lines = [f"p {g.n_vertices} {g.edge_count}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def monomials_export(g: BitGraph) -> str:
    """Plain-text vertex list: one monomial per line as space-separated exponents."""
    if g.labels is None:
        raise DomainError("graph has no monomial labels to export")
    return format_exponent_lines(g.labels)
