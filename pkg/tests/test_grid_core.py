"""Graph construction, slicing, rim layers, and export formats."""

import math
import random

import numpy as np
import pytest

from monogrid.errors import (
    CapacityError,
    DomainError,
    GraphIdentityError,
    ShapeMismatchError,
)
from monogrid.grid_core import (
    ExponentVector,
    adjacent,
    build_graph,
    dot_export,
    edge_list_export,
    enumerate_monomials,
    format_exponent_lines,
    l1_distance,
    lcm_degree,
    monomial_count,
    monomials_export,
    parse_exponent_lines,
    rim_cycle_decomposition,
    slice_graph,
)


def test_enumerate_fig1_order():
    vecs = enumerate_monomials(3, 2)
    assert [v.monomial() for v in vecs] == [
        "x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2",
    ]


def test_enumerate_degree_zero():
    for n in (1, 2, 5):
        vecs = enumerate_monomials(n, 0)
        assert vecs == [ExponentVector([0] * n)]


def test_enumerate_4_8_has_165():
    assert len(enumerate_monomials(4, 8)) == 165 == math.comb(11, 3)


def test_enumerate_no_duplicates_and_degree():
    vecs = enumerate_monomials(5, 6)
    assert len(set(vecs)) == len(vecs) == monomial_count(5, 6)
    assert all(v.d == 6 and v.n == 5 for v in vecs)


def test_enumerate_size_cap():
    with pytest.raises(CapacityError, match="size cap"):
        enumerate_monomials(4, 8, size_cap=100)


def test_enumerate_domain_errors():
    with pytest.raises(DomainError):
        enumerate_monomials(0, 3)
    with pytest.raises(DomainError):
        enumerate_monomials(3, -1)


def test_vertex_count_matches_binomial():
    for n in range(1, 7):
        for d in range(11):
            if monomial_count(n, d) > 4000:
                continue
            g = build_graph(n, d)
            assert g.n_vertices == math.comb(n + d - 1, n - 1)


def test_adjacent_examples():
    x1sq = ExponentVector((2, 0, 0))
    x1x2 = ExponentVector((1, 1, 0))
    x2sq = ExponentVector((0, 2, 0))
    assert adjacent(x1sq, x1x2)
    assert not adjacent(x1sq, x1sq)
    assert not adjacent(x1sq, x2sq)  # lcm x1^2 x2^2 has degree 4


def test_adjacent_shape_errors():
    with pytest.raises(ShapeMismatchError):
        adjacent(ExponentVector((1, 1)), ExponentVector((1, 1, 0)))
    with pytest.raises(ShapeMismatchError):
        adjacent(ExponentVector((2, 0)), ExponentVector((2, 1)))


def test_dual_criterion_agreement_random_pairs():
    rng = random.Random(7)
    for n, d in ((2, 6), (3, 5), (4, 4), (5, 3)):
        vecs = enumerate_monomials(n, d)
        for _ in range(1000):
            f, g = rng.choice(vecs), rng.choice(vecs)
            assert (lcm_degree(f, g) == d + 1) == (l1_distance(f, g) == 2)


def test_path_and_complete_graphs():
    for d in range(1, 7):
        path = build_graph(2, d)
        assert path.n_vertices == d + 1
        assert path.edge_count == d
        assert all(path.degree(v) <= 2 for v in range(path.n_vertices))
    for n in range(2, 6):
        complete = build_graph(n, 1)
        assert complete.edge_count == n * (n - 1) // 2


def test_g32_shape():
    g = build_graph(3, 2)
    assert (g.n_vertices, g.edge_count) == (6, 9)


def test_adjacency_symmetric_irreflexive():
    g = build_graph(4, 4)
    for u in range(g.n_vertices):
        assert not g.has_edge(u, u)
        for v in g.neighbors(u):
            assert g.has_edge(v, u)


def test_build_determinism():
    a = build_graph(3, 7)
    b = build_graph(3, 7)
    assert a.tag == b.tag
    assert a.vertices == b.vertices
    assert np.array_equal(a.adjacency, b.adjacency)


def test_slice_isomorphic_to_smaller_graph():
    for n in (3, 4, 5):
        for d in range(0, 9):
            if monomial_count(n, d) > 600:
                continue
            g = build_graph(n, d)
            for e in range(d + 1):
                piece = slice_graph(g, 1, e)
                target = build_graph(n - 1, d - e)
                mapped = {
                    tuple(sorted((piece.relabel[u], piece.relabel[v])))
                    for u, v in piece.subgraph.edges()
                }
                expected = {tuple(sorted(edge)) for edge in target.edges()}
                assert mapped == expected
                assert piece.subgraph.n_vertices == target.n_vertices


def test_slice_sizes_of_g48():
    g = build_graph(4, 8)
    sizes = [len(slice_graph(g, 1, 8 - a).vertex_set) for a in range(9)]
    assert sizes == [1, 3, 6, 10, 15, 21, 28, 36, 45]


def test_slice_single_vertex():
    g = build_graph(4, 5)
    piece = slice_graph(g, 2, 5)
    assert piece.subgraph.n_vertices == 1
    assert g.labels[next(iter(piece.vertex_set))] == ExponentVector((0, 5, 0, 0))


def test_slice_index_errors():
    g = build_graph(3, 4)
    with pytest.raises(IndexError):
        slice_graph(g, 0, 1)
    with pytest.raises(IndexError):
        slice_graph(g, 4, 1)
    with pytest.raises(IndexError):
        slice_graph(g, 1, 5)


def test_induced_subgraph_identity_and_empty():
    g = build_graph(3, 3)
    whole = g.induced_subgraph(g.all_vertices())
    assert whole.n_vertices == g.n_vertices
    assert whole.edge_count == g.edge_count
    empty = g.induced_subgraph(g.vertex_set(()))
    assert empty.n_vertices == 0 and empty.edge_count == 0


def test_foreign_vertex_set_rejected():
    g = build_graph(3, 3)
    other = build_graph(3, 4)
    with pytest.raises(GraphIdentityError):
        g.induced_subgraph(other.all_vertices())
    with pytest.raises(GraphIdentityError):
        g.vertex_set([99])


def test_delete_side_isomorphic_to_smaller():
    for d in (3, 5, 7):
        g = build_graph(3, d)
        side = g.vertex_set_of(
            ExponentVector((0, i, d - i)) for i in range(d + 1)
        )
        rest = g.delete_vertices(side)
        target = build_graph(3, d - 1)
        # dividing by x1 maps the remainder onto G(3, d-1)
        relabel = [
            target.index(ExponentVector((e[0] - 1, e[1], e[2])))
            for e in rest.labels
        ]
        mapped = {
            tuple(sorted((relabel[u], relabel[v]))) for u, v in rest.edges()
        }
        assert mapped == {tuple(sorted(edge)) for edge in target.edges()}


def test_delete_two_sides_isomorphic():
    d = 6
    g = build_graph(3, d)
    xside = [ExponentVector((0, i, d - i)) for i in range(d + 1)]
    yside = [ExponentVector((1, i, d - i - 1)) for i in range(d)]
    rest = g.delete_vertices(g.vertex_set_of(xside + yside))
    target = build_graph(3, d - 2)
    relabel = [
        target.index(ExponentVector((e[0] - 2, e[1], e[2]))) for e in rest.labels
    ]
    mapped = {tuple(sorted((relabel[u], relabel[v]))) for u, v in rest.edges()}
    assert mapped == {tuple(sorted(edge)) for edge in target.edges()}


def test_delete_empty_returns_same_graph():
    g = build_graph(3, 4)
    rest = g.delete_vertices(g.vertex_set(()))
    assert rest.n_vertices == g.n_vertices
    assert rest.edge_count == g.edge_count


# -- rim layers ----------------------------------------------------------------


def test_rim_layer_sizes():
    layers6 = rim_cycle_decomposition(build_graph(3, 6))
    assert [len(l.vertex_set) for l in layers6] == [18, 9, 1]
    assert layers6[2].degenerate
    layers0 = rim_cycle_decomposition(build_graph(3, 0))
    assert len(layers0) == 1 and layers0[0].degenerate
    layers4 = rim_cycle_decomposition(build_graph(3, 4))
    assert [len(l.vertex_set) for l in layers4] == [12, 3]
    assert [l.cycle_length for l in layers4] == [12, 3]


def test_rim_rejects_other_n():
    with pytest.raises(DomainError):
        rim_cycle_decomposition(build_graph(4, 3))


@pytest.mark.parametrize("a", range(16))
def test_rim_layers_partition_and_span_cycles(a):
    g = build_graph(3, a)
    layers = rim_cycle_decomposition(g)
    seen = set()
    for layer in layers:
        members = set(layer.vertex_set)
        assert not (members & seen)
        seen |= members
        if layer.degenerate:
            assert len(members) == 1
            assert layer.cycle_length == 0
            continue
        walk = layer.walk
        assert len(walk) == layer.cycle_length == 3 * (a - 3 * layer.index)
        assert set(walk) == members
        for i, u in enumerate(walk):
            v = walk[(i + 1) % len(walk)]
            assert g.has_edge(u, v)
        # min exponent is exactly the layer index
        for v in members:
            assert min(g.vertices[v]) == layer.index
    assert seen == set(range(g.n_vertices))


@pytest.mark.parametrize("a", range(2, 13))
def test_rim_layer_chord_structure(a):
    """Induced non-degenerate layers are the spanning cycle plus one chord
    per corner (three in all) except the triangle layer, which is plain K3."""
    g = build_graph(3, a)
    for layer in rim_cycle_decomposition(g):
        if layer.degenerate:
            continue
        sub = g.induced_subgraph(layer.vertex_set)
        m = a - 3 * layer.index
        expected_edges = 3 if m == 1 else 3 * m + 3
        assert sub.edge_count == expected_edges


# -- exports -------------------------------------------------------------------


def test_dot_export_highlight():
    g = build_graph(3, 2)
    vs = g.vertex_set_of(
        [ExponentVector((2, 0, 0)), ExponentVector((0, 2, 0)), ExponentVector((0, 0, 2))]
    )
    dot = dot_export(g, vs)
    assert dot.count("fillcolor") == 3
    assert dot.count(" -- ") == 9
    assert 'label="x1^2"' in dot


def test_monomial_export_round_trip():
    g = build_graph(4, 3)
    text = monomials_export(g)
    parsed = parse_exponent_lines(text)
    assert parsed == list(g.vertices)
    assert format_exponent_lines(parsed) == text


def test_edge_list_export_header():
    g = build_graph(2, 4)
    text = edge_list_export(g)
    lines = text.strip().splitlines()
    assert lines[0] == "p 5 4"
    assert len(lines) == 5
    assert all(line.startswith("e ") for line in lines[1:])


def test_exponent_vector_validation():
    with pytest.raises(ValueError):
        ExponentVector(())
    with pytest.raises(ValueError):
        ExponentVector((1, -1))
    v = ExponentVector((0, 0, 0))
    assert v.monomial() == "1"
    assert v.line() == "0 0 0"
