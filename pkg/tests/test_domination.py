"""Domination solvers, k-domination predicate, bound checks, oracle."""

import random

import pytest

from monogrid import closed_forms
from monogrid.config import Budget, RunConfig
from monogrid.domination import (
    bollobas_cockayne_check,
    brute_force_domination,
    check_igamma_conjecture,
    is_k_dominating,
    min_dominating_set,
    min_independent_dominating_set,
    wagon_gamma3,
)
from monogrid.errors import CapacityError, DomainError, GraphIdentityError
from monogrid.grid_core import ExponentVector, build_graph
from monogrid.solver import brute_force_alpha, import_graph

FIG5_VECTORS = ((3, 0, 1), (2, 2, 0), (2, 1, 1), (1, 1, 2), (1, 0, 3), (0, 2, 2))


def _fig5_subgraph():
    g = build_graph(3, 4)
    return g.induced_subgraph(
        g.vertex_set_of(ExponentVector(v) for v in FIG5_VECTORS)
    )


def test_fig5_subgraph_structure():
    h = _fig5_subgraph()
    assert h.n_vertices == 6
    assert h.edge_count == 5


def test_fig5_gamma_and_idom(config):
    h = _fig5_subgraph()
    gamma = min_dominating_set(h, config)
    idom = min_independent_dominating_set(h, config)
    assert gamma.gamma == 2
    assert idom.idom == 3
    assert brute_force_domination(h) == (2, 3)
    assert is_k_dominating(h, gamma.gamma_witness, 1)
    assert is_k_dominating(h, idom.idom_witness, 1)


def test_single_vertex_and_path(config):
    single = build_graph(1, 5)
    assert min_dominating_set(single, config).gamma == 1
    p5 = build_graph(2, 4)
    assert min_dominating_set(p5, config).gamma == 2
    assert min_independent_dominating_set(p5, config).idom == 2


def test_complete_graph_idom(config):
    for n in (2, 4, 6):
        kn = build_graph(n, 1)
        assert min_independent_dominating_set(kn, config).idom == 1


def test_is_k_dominating_unique_mis(config):
    g = build_graph(3, 12)
    mis = closed_forms.construct_unique_mis_3(12, g)
    assert is_k_dominating(g, mis, 2)
    assert not is_k_dominating(g, mis, 3)
    assert is_k_dominating(g, g.all_vertices(), 7)


def test_is_k_dominating_errors():
    g = build_graph(3, 3)
    other = build_graph(3, 4)
    with pytest.raises(GraphIdentityError):
        is_k_dominating(g, other.all_vertices(), 1)
    with pytest.raises(DomainError):
        is_k_dominating(g, g.all_vertices(), 0)


def test_wagon_values():
    assert wagon_gamma3(14) == 19
    assert wagon_gamma3(15) == 21
    assert wagon_gamma3(21) == 40
    with pytest.raises(DomainError):
        wagon_gamma3(13)


def test_bollobas_cockayne_small(config):
    check = bollobas_cockayne_check(build_graph(3, 2), 2, config)
    assert check.applicable
    assert (check.gamma, check.idom) == (2, 2)
    assert check.holds
    for d in range(1, 9):  # paths are claw-free
        check = bollobas_cockayne_check(build_graph(2, d), 2, config)
        assert check.applicable and check.holds
    check = bollobas_cockayne_check(build_graph(4, 1), 2, config)  # K4
    assert (check.gamma, check.idom, check.bound) == (1, 1, 1)
    assert check.holds


def test_bollobas_cockayne_precondition_violated(config):
    check = bollobas_cockayne_check(build_graph(4, 4), 3, config)
    assert not check.applicable
    assert check.star_witness is not None
    assert check.star_witness.r == 4
    assert check.holds is None


def test_igamma_paths_and_points(config):
    for n in (1, 2):
        for d in range(9):
            g = build_graph(n, d)
            check = check_igamma_conjecture(g, config, n=n, d=d)
            assert check.equal and check.exact
    check = check_igamma_conjecture(build_graph(3, 2), config, n=3, d=2)
    assert check.equal
    assert (check.gamma, check.idom) == (2, 2)


def test_gamma_le_idom_le_alpha_random(config):
    rng = random.Random(11)
    host = build_graph(3, 5)
    for _ in range(25):
        size = rng.randint(1, 16)
        sub = host.induced_subgraph(
            host.vertex_set(rng.sample(range(host.n_vertices), size))
        )
        gamma = min_dominating_set(sub, config).gamma
        idom = min_independent_dominating_set(sub, config).idom
        alpha = brute_force_alpha(sub).objective
        oracle = brute_force_domination(sub)
        assert (gamma, idom) == oracle
        assert gamma <= idom <= alpha


def test_maximal_independent_sets_dominate(config):
    # any maximal independent set is 1-dominating
    from monogrid.solver import enumerate_maximum_independent_sets

    for n, d in ((3, 4), (3, 6), (4, 2)):
        g = build_graph(n, d)
        report = enumerate_maximum_independent_sets(g, 1000, config)
        assert report.enumeration_complete
        for witness in report.witnesses:
            assert is_k_dominating(g, witness, 1)


def test_domination_capacity_gate():
    config = RunConfig(threads=1, domination_cap=20)
    g = build_graph(3, 6)  # 28 vertices
    with pytest.raises(CapacityError, match="desk-scale|gated"):
        min_dominating_set(g, config)
    report = min_dominating_set(g, config, allow_large=True)
    assert report.gamma == 6


def test_domination_budget_flagged():
    config = RunConfig(threads=1, budget=Budget(max_nodes=5))
    g = build_graph(3, 8)
    report = min_dominating_set(g, config)
    assert not report.gamma_exact
    assert report.budget_exhausted == "nodes"
    assert report.gamma >= 9  # the greedy upper bound, flagged inexact


def test_empty_graph_domination(config):
    empty = import_graph(0, [])
    assert min_dominating_set(empty, config).gamma == 0
    assert min_independent_dominating_set(empty, config).idom == 0


def test_report_invariant_violation_raises():
    from monogrid.domination import DominationReport

    with pytest.raises(AssertionError):
        DominationReport(gamma=3, idom=2)
