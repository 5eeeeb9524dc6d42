"""Static figure emission for triangular (n=3) and tetrahedral (n=4) grids.

n=3 uses unit triangular-lattice coordinates (row height sqrt(3)/2):
vertex (e1, e2, e3) sits at x = e3 + e1/2, y = e1 * sqrt(3)/2, so x2^d is
the lower-left corner, x3^d lower-right, x1^d the apex.  n=4 draws one
such lattice per x1-slice, ordered by remaining degree, in a row.
Highlighted vertices are filled red.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .grid_core import MonomialGraph, VertexSet

_ROW = math.sqrt(3.0) / 2.0
_SLICE_GAP = 1.5


def _positions(g: MonomialGraph) -> list[tuple[float, float]]:
    if g.n == 3:
        return [(e[2] + e[0] / 2.0, e[0] * _ROW) for e in g.vertices]
    if g.n == 4:
        offsets = {}
        x_cursor = 0.0
        for a in range(g.d + 1):  # slice with remaining degree a, drawn left to right
            offsets[g.d - a] = x_cursor
            x_cursor += a + _SLICE_GAP
        out = []
        for e in g.vertices:
            base = offsets[e[0]]
            out.append((base + e[3] + e[1] / 2.0, e[1] * _ROW))
        return out
    raise DomainError(f"figures are drawn for n in {{3, 4}}, got n={g.n}")


def render_svg(g: MonomialGraph, highlight: VertexSet | None = None,
               scale: float = 42.0) -> str:
    """Deterministic standalone SVG of the graph with optional highlights."""
    if highlight is not None:
        g.check_owns(highlight)
    pos = _positions(g)
    margin = 0.6
    xs = [p[0] for p in pos]
    ys = [p[1] for p in pos]
    width = (max(xs) - min(xs) + 2 * margin) * scale
    height = (max(ys) - min(ys) + 2 * margin) * scale
    x0 = min(xs) - margin
    y1 = max(ys) + margin

    def at(v: int) -> tuple[float, float]:
        x, y = pos[v]
        return ((x - x0) * scale, (y1 - y) * scale)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.2f} {height:.2f}">',
        f"<!-- {g.tag}: {g.n_vertices} vertices, {g.edge_count} edges -->",
    ]
    for u, v in g.edges():
        (ux, uy), (vx, vy) = at(u), at(v)
        lines.append(
            f'<line x1="{ux:.2f}" y1="{uy:.2f}" x2="{vx:.2f}" y2="{vy:.2f}" '
            'stroke="black" stroke-width="1"/>'
        )
    for v in range(g.n_vertices):
        (x, y) = at(v)
        fill = "red" if highlight is not None and v in highlight else "white"
        lines.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{0.16 * scale:.2f}" '
            f'fill="{fill}" stroke="black" stroke-width="1">'
            f"<title>{g.vertices[v].monomial()}</title></circle>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_tikz(g: MonomialGraph, highlight: VertexSet | None = None) -> str:
    """TikZ picture using unit spacing and sqrt(3)/2 row height."""
    if highlight is not None:
        g.check_owns(highlight)
    pos = _positions(g)
    lines = ["\\begin{tikzpicture}[scale=0.75]"]
    for u, v in g.edges():
        (ux, uy), (vx, vy) = pos[u], pos[v]
        lines.append(
            f"\\draw ({ux:.4f},{uy:.4f}) -- ({vx:.4f},{vy:.4f});"
        )
    for v in range(g.n_vertices):
        if highlight is not None and v in highlight:
            x, y = pos[v]
            lines.append(
                f"\\node[draw, circle, fill=red, scale=0.65] at ({x:.4f},{y:.4f}) {{}};"
            )
        else:
            x, y = pos[v]
            lines.append(
                f"\\node[draw, circle, fill=white, scale=0.5] at ({x:.4f},{y:.4f}) {{}};"
            )
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render(g: MonomialGraph, fmt: str, highlight: VertexSet | None = None) -> str:
    if fmt == "svg":
        return render_svg(g, highlight)
    if fmt == "tikz":
        return render_tikz(g, highlight)
    raise DomainError(f"unknown figure format {fmt!r}; use svg or tikz")


def slice_highlight_tally(g: MonomialGraph, highlight: VertexSet) -> list[int]:
    """Highlighted-vertex count per slice, ordered by remaining degree 0..d.

    For n=4 this is the per-slice profile visible in the slice-strip figure.
    """
    g.check_owns(highlight)
    if g.n < 2:
        raise DomainError("slice tally needs at least two variables")
    tally = [0] * (g.d + 1)
    for v in highlight:
        e1 = g.vertices[v][0]
        tally[g.d - e1] += 1
    return tally
