"""Acceptance gate: runs every criterion of the built-in regression suite at
exact tolerance and prints one pass/fail line per criterion.

Criteria 4 and 5 contain budget-gated stretch computations that may
legitimately come back inconclusive on slow machines; everything else must
pass outright.  Run with ``pytest tests/test_acceptance.py -s`` to see the
per-criterion lines as they complete.
"""

import pytest

from monogrid import regression
from monogrid.config import RunConfig

CONFIG = RunConfig(threads=2)
STRETCH_SECONDS = 300.0


def _report(result):
    print(f"ACCEPTANCE CRITERION {result.criterion:2d} [{result.check_id}]: "
          f"{result.status.upper()}")
    for line in result.details:
        print(f"    {line}")


def _run(fn, *, allow_inconclusive=False, **kwargs):
    result = fn(CONFIG, **kwargs)
    _report(result)
    if allow_inconclusive:
        assert result.status != "fail", result.details
    else:
        assert result.status == "pass", result.details
    return result


def test_criterion_01a_triangle_alpha_formula():
    result = _run(regression.check_triangle_alpha_formula)
    assert result.numbers["alpha3_6"] == 10
    assert result.numbers["alpha3_12"] == 31


def test_criterion_01b_tetra_alpha_formula():
    result = _run(regression.check_tetra_alpha_formula)
    assert result.numbers["alpha4_7"] == 30
    assert result.numbers["alpha4_8"] == 45


def test_criterion_02_degree_six_pair():
    result = _run(regression.check_triangle_six)
    assert result.numbers["a3_6"] == 2


def test_criterion_03_triangle_uniqueness():
    result = _run(regression.check_triangle_unique)
    assert result.numbers["a3_12"] == 1
    assert result.numbers["alpha3_9"] == 19


def test_criterion_04_howroyd_data():
    result = _run(regression.check_howroyd_data, allow_inconclusive=True)
    if result.status == "pass":
        assert result.numbers["a3_10"] == 27
        assert result.numbers["a3_11"] == 27


def test_criterion_05_tetra_uniqueness_with_stretch():
    result = _run(regression.check_tetra_unique, allow_inconclusive=True,
                  stretch_seconds=STRETCH_SECONDS)
    assert result.numbers["a4_6"] == 1
    assert result.numbers["alpha4_8"] == 45
    assert result.numbers["construct4_8_size"] == 45
    if "stretch_a4_8" in result.numbers:
        assert result.numbers["stretch_a4_8"] == 1


def test_criterion_06_count_prefixes():
    result = _run(regression.check_count_prefixes)
    assert [result.numbers[f"a4_{d}"] for d in range(7)] == [1, 4, 1, 80, 1, 944, 1]
    assert [result.numbers[f"a5_{d}"] for d in range(5)] == [1, 5, 1, 705, 5]


def test_criterion_07_small_degree_proposition():
    result = _run(regression.check_small_degrees)
    assert result.numbers["a6_1"] == 6


def test_criterion_08_star_freeness():
    result = _run(regression.check_star_freeness)
    assert result.numbers["star_grid_mismatches"] == 0
    assert result.numbers["star_witnesses_built"] == 64


def test_criterion_09_domination_facts():
    result = _run(regression.check_domination_facts)
    assert result.numbers["H_gamma"] == 2
    assert result.numbers["H_idom"] == 3


def test_criterion_10_igamma_equality():
    _run(regression.check_igamma_data)


def test_criterion_11_oracle_equivalence():
    result = _run(regression.check_oracle_equivalence)
    assert result.numbers["mis_oracle_mismatches"] == 0
    assert result.numbers["dom_oracle_mismatches"] == 0


def test_criterion_12_arithmetic_identities():
    result = _run(regression.check_arithmetic_identities)
    assert result.numbers["identities_checked"] == 116


def test_criterion_13_worker_determinism():
    result = _run(regression.check_worker_determinism)
    assert result.numbers["worker_dependent_numbers"] == 0
