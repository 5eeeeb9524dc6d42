"""Closed-form values, identities, and the explicit constructions."""

import pytest

from monogrid.closed_forms import (
    ALPHA3_EXCEPTIONAL,
    alpha3_formula,
    alpha4_formula,
    construct_rim_independent_choice,
    construct_unique_mis_3,
    construct_unique_mis_4,
    epsilon,
    parity_size_identity,
    rim_skeleton_vectors,
    unique_mis3_vectors,
    unique_mis4_vectors,
    verify_difference_identities,
    verify_sum_identities,
)
from monogrid.errors import DomainError, InfeasibleChoiceError
from monogrid.grid_core import ExponentVector, build_graph, rim_cycle_decomposition
from monogrid.solver import brute_force_alpha, is_independent, max_independent_set


def test_alpha3_values():
    assert alpha3_formula(6).value == 10
    assert alpha3_formula(9).value == 19
    assert alpha3_formula(12).value == 31
    assert alpha3_formula(0).value == 1
    assert alpha3_formula(6).applicability == "exact"


def test_alpha3_exceptional_values_match_oracle():
    for d, pinned in ALPHA3_EXCEPTIONAL.items():
        formula = alpha3_formula(d)
        assert formula.applicability == "exceptional"
        assert formula.value == pinned
        assert brute_force_alpha(build_graph(3, d)).objective == pinned
    # the pinned values genuinely differ from the ceiling expression
    assert ALPHA3_EXCEPTIONAL[2] == 3 != ((2 + 2) * (2 + 1) + 5) // 6
    assert ALPHA3_EXCEPTIONAL[4] == 6 != ((4 + 2) * (4 + 1) + 5) // 6


def test_alpha4_values(config):
    assert alpha4_formula(8).value == 45
    assert alpha4_formula(0).value == 1
    assert alpha4_formula(5).value == 14
    assert max_independent_set(build_graph(4, 5), config).objective == 14


def test_alpha4_always_integer():
    for d in range(101):
        alpha4_formula(d)  # raises if a divisibility assertion fails


def test_difference_identities():
    checks = verify_difference_identities(3)
    assert checks["alpha3_step1"] == (19, 19)
    assert len(checks) == 5
    assert verify_difference_identities(4)["alpha4_odd_step"] == (15, 15)
    small = verify_difference_identities(1)
    assert set(small) == {"alpha4_odd_step", "alpha4_even_step"}
    assert small["alpha4_even_step"] == (3, 3)
    with pytest.raises(DomainError):
        verify_difference_identities(0)


def test_epsilon_and_sum_identities():
    assert [epsilon(m) for m in range(9)] == [1, 0, 0, 1, 0, 0, 1, 0, 0]
    assert verify_sum_identities(3)["ring_sum_full"] == (10, 10)
    assert verify_sum_identities(1)["ring_sum_full"] == (3, 3)
    assert verify_sum_identities(0)["ring_sum_inner"] == (1, 1)
    for m in range(31):
        verify_sum_identities(m)


def test_rim_skeleton_sizes():
    for d in range(0, 31, 3):
        assert len(rim_skeleton_vectors(d)) == d or d == 0
    assert rim_skeleton_vectors(0) == {ExponentVector((0, 0, 0))}
    with pytest.raises(DomainError):
        rim_skeleton_vectors(4)


def test_mis3_construction_base_cases():
    assert unique_mis3_vectors(0) == {ExponentVector((0, 0, 0))}
    assert unique_mis3_vectors(3) == {
        ExponentVector((3, 0, 0)),
        ExponentVector((0, 3, 0)),
        ExponentVector((0, 0, 3)),
        ExponentVector((1, 1, 1)),
    }


def test_mis3_construction_sizes_and_independence():
    for d in range(0, 19, 3):
        g = build_graph(3, d)
        vs = construct_unique_mis_3(d, g)
        assert len(vs) == alpha3_formula(d).value
        assert is_independent(g, vs)


def test_mis3_domain_errors():
    g = build_graph(3, 4)
    with pytest.raises(DomainError):
        construct_unique_mis_3(4, g)
    with pytest.raises(DomainError):
        construct_unique_mis_3(3, g)  # graph degree mismatch


def test_mis4_squares_at_degree_two():
    assert unique_mis4_vectors(2) == {
        ExponentVector((2, 0, 0, 0)),
        ExponentVector((0, 2, 0, 0)),
        ExponentVector((0, 0, 2, 0)),
        ExponentVector((0, 0, 0, 2)),
    }


def test_mis4_parity_identity_arithmetic():
    for d in range(0, 41, 2):
        built, formula = parity_size_identity(d)
        assert built == formula


def test_mis4_construction_independent():
    for d in range(0, 13, 2):
        g = build_graph(4, d)
        vs = construct_unique_mis_4(d, g)
        assert len(vs) == alpha4_formula(d).value
        assert is_independent(g, vs)


def test_mis4_domain_error():
    g = build_graph(4, 4)
    with pytest.raises(DomainError):
        construct_unique_mis_4(3, g)


def test_rim_choice_c12_through_corner():
    g = build_graph(3, 4)
    rim = rim_cycle_decomposition(g)[0]
    chosen = construct_rim_independent_choice(g, rim, (0, 4, 0))
    labels = {g.labels[v] for v in chosen}
    assert labels == {
        ExponentVector(v)
        for v in ((4, 0, 0), (0, 4, 0), (0, 0, 4), (2, 2, 0), (2, 0, 2), (0, 2, 2))
    }
    assert is_independent(g, chosen)


def test_rim_choice_inner_triangle_and_degenerate():
    g5 = build_graph(3, 5)
    inner = rim_cycle_decomposition(g5)[1]  # C6
    chosen = construct_rim_independent_choice(g5, inner, (3, 1, 1))
    assert len(chosen) == 3
    assert is_independent(g5, chosen)
    g6 = build_graph(3, 6)
    center = rim_cycle_decomposition(g6)[2]
    assert center.degenerate
    chosen = construct_rim_independent_choice(g6, center, (2, 2, 2))
    assert len(chosen) == 1


def test_rim_choice_odd_cycle_infeasible():
    g = build_graph(3, 3)
    rim = rim_cycle_decomposition(g)[0]  # C9
    with pytest.raises(InfeasibleChoiceError):
        construct_rim_independent_choice(g, rim, (3, 0, 0))


def test_rim_choice_chord_conflict():
    g = build_graph(3, 4)
    rim = rim_cycle_decomposition(g)[0]
    with pytest.raises(InfeasibleChoiceError, match="chord"):
        construct_rim_independent_choice(g, rim, (3, 1, 0))


def test_rim_choice_foreign_anchor():
    g = build_graph(3, 4)
    layers = rim_cycle_decomposition(g)
    with pytest.raises(DomainError):
        construct_rim_independent_choice(g, layers[1], (4, 0, 0))
