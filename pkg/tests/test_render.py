"""Figure emission: SVG and TikZ layouts, highlights, slice tallies."""

import pytest

from monogrid import closed_forms
from monogrid.errors import DomainError
from monogrid.grid_core import build_graph
from monogrid.render import render, render_svg, render_tikz, slice_highlight_tally


def test_svg_triangle_counts():
    g = build_graph(3, 2)
    svg = render_svg(g)
    assert svg.count("<circle") == 6
    assert svg.count("<line") == 9
    assert "<title>x1^2</title>" in svg


def test_svg_single_vertex():
    svg = render_svg(build_graph(3, 0))
    assert svg.count("<circle") == 1
    assert svg.count("<line") == 0


def test_svg_highlight_fill_count():
    g = build_graph(3, 12)
    vs = closed_forms.construct_unique_mis_3(12, g)
    svg = render_svg(g, vs)
    assert svg.count('fill="red"') == 31


def test_tetra_slices_as_row():
    g = build_graph(4, 8)
    vs = closed_forms.construct_unique_mis_4(8, g)
    svg = render_svg(g, vs)
    assert svg.count("<circle") == 165
    assert svg.count('fill="red"') == 45
    assert slice_highlight_tally(g, vs) == [1, 0, 3, 1, 6, 3, 10, 6, 15]


def test_tikz_output():
    g = build_graph(3, 2)
    tikz = render_tikz(g)
    assert tikz.startswith("\\begin{tikzpicture}")
    assert tikz.count("\\draw") == 9
    assert tikz.count("\\node") == 6
    assert render_tikz(g) == tikz  # deterministic


def test_render_format_dispatch_and_errors():
    g = build_graph(3, 1)
    assert render(g, "svg").startswith("<svg")
    assert render(g, "tikz").startswith("\\begin")
    with pytest.raises(DomainError):
        render(g, "png")
    with pytest.raises(DomainError):
        render_svg(build_graph(5, 2))
