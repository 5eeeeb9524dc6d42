"""Built-in regression suite: every closed form, known value, construction
and bound the package implements, checked end to end at exact tolerance.

Each check returns a three-valued status (pass / fail / inconclusive) plus
the exact numbers it computed; budget-gated stretch values are marked by a
``stretch_`` key prefix and excluded from the worker-determinism
comparison (they depend on wall-clock budgets, not on worker count).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from . import closed_forms, domination, property_checks, sequence_lab
from .config import DEFAULT, Budget, RunConfig
from .errors import DomainError, IdentityCheckError
from .grid_core import ExponentVector, build_graph
from .solver import (
    brute_force_alpha,
    count_maximum_independent_sets,
    enumerate_maximum_independent_sets,
    is_independent,
    max_independent_set,
)

_ORACLE_SEED = 20260811


@dataclass
class CheckResult:
    criterion: int
    check_id: str
    status: str  # "pass" | "fail" | "inconclusive"
    details: list[str]
    numbers: dict[str, object]

    @property
    def ok(self) -> bool:
        return self.status != "fail"


class _Check:
    def __init__(self, criterion: int, check_id: str):
        self.result = CheckResult(criterion, check_id, "pass", [], {})

    def fail(self, message: str):
        self.result.status = "fail"
        self.result.details.append("FAIL: " + message)

    def inconclusive(self, message: str):
        if self.result.status == "pass":
            self.result.status = "inconclusive"
        self.result.details.append("INCONCLUSIVE: " + message)

    def note(self, message: str):
        self.result.details.append(message)

    def expect(self, name: str, got, want) -> bool:
        self.result.numbers[name] = got if not isinstance(got, bool) else int(got)
        if got != want:
            self.fail(f"{name}: got {got}, expected {want}")
            return False
        return True


def check_triangle_alpha_formula(config: RunConfig, **_) -> CheckResult:
    """Criterion 1a: solver alpha(G(3,d)) matches the ceiling formula,
    d <= 12 (pinned exceptional values at d in {2, 4})."""
    c = _Check(1, "alpha-formula-triangle")
    for d in range(13):
        g = build_graph(3, d)
        report = max_independent_set(g, config)
        if not report.exact:
            c.inconclusive(f"alpha(G(3,{d})) hit a budget")
            continue
        c.expect(f"alpha3_{d}", report.objective, closed_forms.alpha3_formula(d).value)
    return c.result


def check_tetra_alpha_formula(config: RunConfig, **_) -> CheckResult:
    """Criterion 1b: solver alpha(G(4,d)) matches the cubic formulas, d <= 8."""
    c = _Check(1, "alpha-formula-tetra")
    for d in range(9):
        g = build_graph(4, d)
        report = max_independent_set(g, config)
        if not report.exact:
            c.inconclusive(f"alpha(G(4,{d})) hit a budget")
            continue
        c.expect(f"alpha4_{d}", report.objective, closed_forms.alpha4_formula(d).value)
    return c.result


def check_triangle_six(config: RunConfig, **_) -> CheckResult:
    """Criterion 2: G(3,6) has alpha 10 and exactly two maximum independent
    sets, one of them the rim-and-recurse construction."""
    c = _Check(2, "triangle-degree-six-pair")
    g = build_graph(3, 6)
    enum = enumerate_maximum_independent_sets(g, 10, config)
    if not enum.exact:
        c.inconclusive("enumeration hit a budget")
        return c.result
    c.expect("alpha3_6", enum.objective, 10)
    c.expect("a3_6", enum.count, 2)
    constructed = closed_forms.construct_unique_mis_3(6, g)
    members = [w.members for w in enum.witnesses]
    if constructed.members not in members:
        c.fail("construction is not among the enumerated maximum sets")
    return c.result


def check_triangle_unique(config: RunConfig, **_) -> CheckResult:
    """Criterion 3: unique maximum independent sets at d in {0,3,9,12} equal
    the construction; alpha(G(3,9)) = 19 and alpha(G(3,12)) = 31."""
    c = _Check(3, "triangle-unique-mis")
    for d in (0, 3, 9, 12):
        g = build_graph(3, d)
        enum = enumerate_maximum_independent_sets(g, 2, config)
        if not enum.exact:
            c.inconclusive(f"enumeration on G(3,{d}) hit a budget")
            continue
        c.expect(f"a3_{d}", enum.count, 1)
        constructed = closed_forms.construct_unique_mis_3(d, g)
        if enum.witnesses and enum.witnesses[0].members != constructed.members:
            c.fail(f"solver witness differs from construction at d={d}")
        if d == 9:
            c.expect("alpha3_9", enum.objective, 19)
        if d == 12:
            c.expect("alpha3_12", enum.objective, 31)
    return c.result


def check_howroyd_data(config: RunConfig, **_) -> CheckResult:
    """Criterion 4: a_3(10) = a_3(11) = 27, computed exactly."""
    c = _Check(4, "howroyd-conjecture-data")
    for d in (10, 11):
        g = build_graph(3, d)
        report = count_maximum_independent_sets(g, config)
        if not report.exact:
            c.inconclusive(f"count on G(3,{d}) hit a budget")
            continue
        c.expect(f"a3_{d}", report.count, 27)
    return c.result


def check_tetra_unique(config: RunConfig, stretch_seconds: float = 300.0, **_) -> CheckResult:
    """Criterion 5: unique maximum sets at even d <= 6 equal the parity
    construction; alpha(G(4,8)) = 45 with the construction independent of
    that size; the full count on G(4,8) is a budgeted stretch goal."""
    c = _Check(5, "tetra-unique-mis")
    for d in (0, 2, 4, 6):
        g = build_graph(4, d)
        enum = enumerate_maximum_independent_sets(g, 2, config)
        if not enum.exact:
            c.inconclusive(f"enumeration on G(4,{d}) hit a budget")
            continue
        c.expect(f"a4_{d}", enum.count, 1)
        constructed = closed_forms.construct_unique_mis_4(d, g)
        if enum.witnesses and enum.witnesses[0].members != constructed.members:
            c.fail(f"solver witness differs from construction at d={d}")
    g8 = build_graph(4, 8)
    report = max_independent_set(g8, config)
    if report.exact:
        c.expect("alpha4_8", report.objective, 45)
    else:
        c.inconclusive("alpha(G(4,8)) hit a budget")
    constructed = closed_forms.construct_unique_mis_4(8, g8)
    c.expect("construct4_8_size", len(constructed), 45)
    if not is_independent(g8, constructed):
        c.fail("the 45-vertex construction is not independent")
    if stretch_seconds and stretch_seconds > 0:
        stretch_config = replace(config, budget=Budget(max_seconds=stretch_seconds))
        stretch = count_maximum_independent_sets(g8, stretch_config)
        if stretch.exact:
            c.expect("stretch_a4_8", stretch.count, 1)
        else:
            c.inconclusive(
                f"stretch count on G(4,8) exhausted its {stretch_seconds:.0f}s budget"
            )
    else:
        c.note("stretch count on G(4,8) skipped (no budget given)")
    return c.result


def check_count_prefixes(config: RunConfig, **_) -> CheckResult:
    """Criterion 6: a_4(0..6) = 1,4,1,80,1,944,1 and a_5(0..4) = 1,5,1,705,5."""
    c = _Check(6, "count-sequence-prefixes")
    expected = {4: [1, 4, 1, 80, 1, 944, 1], 5: [1, 5, 1, 705, 5]}
    for n, values in expected.items():
        for d, want in enumerate(values):
            g = build_graph(n, d)
            report = count_maximum_independent_sets(g, config)
            if not report.exact:
                c.inconclusive(f"count on G({n},{d}) hit a budget")
                continue
            c.expect(f"a{n}_{d}", report.count, want)
    return c.result


def check_small_degrees(config: RunConfig, **_) -> CheckResult:
    """Criterion 7: a_n(0) = 1, a_n(1) = n, a_n(2) = 1 with the squares
    witness, for n <= 6."""
    c = _Check(7, "small-degree-counts")
    rows = sequence_lab.check_small_d_proposition(6, config)
    for n, row in rows.items():
        c.expect(f"a{n}_0", row["count_d0"], 1)
        c.expect(f"a{n}_1", row["count_d1"], n)
        c.expect(f"a{n}_2", row["count_d2"], 1)
        if not row["squares_witness_ok"]:
            c.fail(f"unique d=2 witness for n={n} is not the squares")
    return c.result


def check_star_freeness(config: RunConfig, **_) -> CheckResult:
    """Criterion 8: search-based induced-star freeness equals the closed
    criterion (d < r or n < r) on the full grid n <= 5, d <= 6, r <= 6,
    and every explicit witness verifies as an induced star.

    Degenerate corner: at n = r = 1, d >= 1 the closed criterion claims a
    star exists but the one-vertex graph has none; the search result (free)
    is asserted there instead and the corner is reported, not hidden.
    """
    c = _Check(8, "star-freeness-criterion")
    mismatches = 0
    corner_cells = 0
    for n in range(1, 6):
        for d in range(7):
            g = build_graph(n, d)
            for r in range(1, 7):
                free, witness = property_checks.is_k1r_free(g, r, config)
                criterion = property_checks.closed_k1r_criterion(n, d, r)
                if n == 1 and r == 1 and d >= 1:
                    corner_cells += 1
                    if not free:
                        c.fail(f"one-vertex graph G(1,{d}) reported a star")
                    continue
                if free != criterion:
                    mismatches += 1
                    c.fail(f"freeness mismatch at n={n}, d={d}, r={r}: "
                           f"search={free}, criterion={criterion}")
                if not free and witness is None:
                    c.fail(f"missing witness at n={n}, d={d}, r={r}")
    c.expect("star_grid_mismatches", mismatches, 0)
    c.note(
        f"{corner_cells} degenerate n=r=1 cells checked against the "
        "edge-based definition (closed criterion misfires there)"
    )
    built = 0
    for n in range(1, 6):
        for d in range(7):
            for r in range(1, 7):
                if d < r or n < r:
                    continue
                if n == 1 and r == 1:
                    continue  # no edge exists to witness; see note above
                property_checks.build_star_witness(n, d, r)  # raises if not a star
                built += 1
    c.expect("star_witnesses_built", built, 64)
    return c.result


_H_VECTORS = ((3, 0, 1), (2, 2, 0), (2, 1, 1), (1, 1, 2), (1, 0, 3), (0, 2, 2))
_H_EDGES = {
    ((3, 0, 1), (2, 1, 1)),
    ((2, 2, 0), (2, 1, 1)),
    ((2, 1, 1), (1, 1, 2)),
    ((1, 1, 2), (1, 0, 3)),
    ((1, 1, 2), (0, 2, 2)),
}


def check_domination_facts(config: RunConfig, **_) -> CheckResult:
    """Criterion 9: the 6-vertex induced subgraph of G(3,4) separating gamma
    from i has gamma = 2 and i = 3, and every unique-maximum construction is
    2-dominating but not 3-dominating."""
    c = _Check(9, "domination-facts")
    g34 = build_graph(3, 4)
    vectors = [ExponentVector(v) for v in _H_VECTORS]
    h = g34.induced_subgraph(g34.vertex_set_of(vectors))
    edges = {
        tuple(sorted((tuple(h.labels[u]), tuple(h.labels[v]))))
        for u, v in h.edges()
    }
    expected_edges = {tuple(sorted(e)) for e in _H_EDGES}
    c.expect("H_vertices", h.n_vertices, 6)
    c.expect("H_edges", h.edge_count, 5)
    if edges != expected_edges:
        c.fail(f"induced subgraph edges differ from the drawn graph: {sorted(edges)}")
    gamma = domination.min_dominating_set(h, config)
    idom = domination.min_independent_dominating_set(h, config)
    c.expect("H_gamma", gamma.gamma, 2)
    c.expect("H_idom", idom.idom, 3)
    oracle = domination.brute_force_domination(h)
    c.expect("H_oracle_gamma", oracle[0], 2)
    c.expect("H_oracle_idom", oracle[1], 3)
    for n, ds, construct in (
        (3, (3, 9, 12), closed_forms.construct_unique_mis_3),
        (4, (2, 4, 6, 8), closed_forms.construct_unique_mis_4),
    ):
        for d in ds:
            g = build_graph(n, d)
            s = construct(d, g)
            two = domination.is_k_dominating(g, s, 2)
            three = domination.is_k_dominating(g, s, 3)
            c.expect(f"two_dominating_{n}_{d}", int(two), 1)
            c.expect(f"three_dominating_{n}_{d}", int(three), 0)
    return c.result


def check_igamma_data(config: RunConfig, **_) -> CheckResult:
    """Criterion 10: gamma = i on G(3, d <= 10) and G(4, d <= 4), exactly;
    any inequality is oracle-rechecked and surfaced as a certificate."""
    c = _Check(10, "independent-domination-equality")
    for n, d_max in ((3, 10), (4, 4)):
        verdict = sequence_lab.check_i_equals_gamma(n, d_max, config)
        for d, status in verdict.statuses.items():
            if status == "inconclusive":
                c.inconclusive(f"gamma/i on G({n},{d}) hit a budget")
                continue
            c.expect(f"igamma_{n}_{d}_equal", int(status == "consistent"), 1)
            if status == "violated":
                c.note(f"certificate: {verdict.certificates[d]}")
    return c.result


def _random_induced_subgraphs(rng: random.Random, cases: int, max_vertices: int):
    hosts = [build_graph(3, d) for d in (4, 5, 6)]
    out = []
    for _ in range(cases):
        host = rng.choice(hosts)
        size = rng.randint(1, max_vertices)
        members = rng.sample(range(host.n_vertices), min(size, host.n_vertices))
        out.append(host.induced_subgraph(host.vertex_set(members)))
    return out


def check_oracle_equivalence(config: RunConfig, **_) -> CheckResult:
    """Criterion 11: branch-and-bound alpha/count equals the exhaustive
    oracle on 200 random induced subgraphs (<= 20 vertices), and gamma/i
    equals the subset-scan oracle on 200 subgraphs (<= 18 vertices)."""
    c = _Check(11, "oracle-equivalence")
    rng = random.Random(_ORACLE_SEED)
    mis_cases = _random_induced_subgraphs(rng, 200, 20)
    checksum = 0
    mismatches = 0
    for sub in mis_cases:
        fast = count_maximum_independent_sets(sub, config)
        slow = brute_force_alpha(sub)
        if not fast.exact:
            c.inconclusive(f"count on {sub.tag} hit a budget")
            continue
        if (fast.objective, fast.count) != (slow.objective, slow.count):
            mismatches += 1
            c.fail(
                f"alpha/count mismatch on {sub.tag}: "
                f"({fast.objective},{fast.count}) vs ({slow.objective},{slow.count})"
            )
        checksum = (checksum * 1000003 + fast.objective * 31 + fast.count) % (1 << 61)
    c.expect("mis_oracle_cases", len(mis_cases), 200)
    c.expect("mis_oracle_mismatches", mismatches, 0)
    c.result.numbers["mis_oracle_checksum"] = checksum

    dom_cases = _random_induced_subgraphs(rng, 200, 18)
    dom_checksum = 0
    dom_mismatches = 0
    for sub in dom_cases:
        gamma = domination.min_dominating_set(sub, config).gamma
        idom = domination.min_independent_dominating_set(sub, config).idom
        oracle = domination.brute_force_domination(sub)
        if (gamma, idom) != oracle:
            dom_mismatches += 1
            c.fail(
                f"gamma/i mismatch on {sub.tag}: ({gamma},{idom}) vs {oracle}"
            )
        dom_checksum = (dom_checksum * 1000003 + gamma * 31 + idom) % (1 << 61)
    c.expect("dom_oracle_cases", len(dom_cases), 200)
    c.expect("dom_oracle_mismatches", dom_mismatches, 0)
    c.result.numbers["dom_oracle_checksum"] = dom_checksum
    return c.result


def check_arithmetic_identities(config: RunConfig, **_) -> CheckResult:
    """Criterion 12: the step identities for 3 <= k <= 12 (n=3 part) and
    1 <= k <= 12 (n=4 part), and the ring-sum identities for m <= 30."""
    c = _Check(12, "arithmetic-identities")
    checked = 0
    try:
        for k in range(1, 13):
            results = closed_forms.verify_difference_identities(k)
            if k >= 3 and len(results) != 5:
                c.fail(f"expected all five identities at k={k}")
            checked += len(results)
        for m in range(31):
            checked += len(closed_forms.verify_sum_identities(m))
    except (DomainError, IdentityCheckError) as exc:
        c.fail(str(exc))
    # 2 identities for k in {1, 2}, 5 for 3 <= k <= 12, 2 per m <= 30
    c.expect("identities_checked", checked, 2 * 2 + 5 * 10 + 2 * 31)
    return c.result


_NUMERIC_CHECKS = [
    check_triangle_alpha_formula,
    check_tetra_alpha_formula,
    check_triangle_six,
    check_triangle_unique,
    check_howroyd_data,
    check_tetra_unique,
    check_count_prefixes,
    check_small_degrees,
    check_star_freeness,
    check_domination_facts,
    check_igamma_data,
    check_oracle_equivalence,
    check_arithmetic_identities,
]


def collect_numbers(config: RunConfig, stretch_seconds: float = 0.0) -> dict:
    """All exact numbers from the numeric checks, keyed check_id/name."""
    merged = {}
    for fn in _NUMERIC_CHECKS:
        result = fn(config, stretch_seconds=stretch_seconds)
        for name, value in result.numbers.items():
            merged[f"{result.check_id}/{name}"] = value
    return merged


def check_worker_determinism(config: RunConfig, **_) -> CheckResult:
    """Criterion 13: the numeric checks produce identical numbers with 1 and
    8 solver workers (budget-gated stretch values excluded: they depend on
    wall-clock budgets, not on the worker count)."""
    c = _Check(13, "worker-determinism")
    numbers_1 = collect_numbers(replace(config, threads=1))
    numbers_8 = collect_numbers(replace(config, threads=8))
    diffs = {
        key
        for key in set(numbers_1) | set(numbers_8)
        if "stretch_" not in key and numbers_1.get(key) != numbers_8.get(key)
    }
    c.result.numbers["compared_numbers"] = len(set(numbers_1) | set(numbers_8))
    c.expect("worker_dependent_numbers", len(diffs), 0)
    for key in sorted(diffs):
        c.fail(f"{key}: {numbers_1.get(key)} (1 worker) vs {numbers_8.get(key)} (8 workers)")
    return c.result


ALL_CHECKS = _NUMERIC_CHECKS + [check_worker_determinism]


def run_all(config: RunConfig = DEFAULT, stretch_seconds: float = 300.0) -> list[CheckResult]:
    return [fn(config, stretch_seconds=stretch_seconds) for fn in ALL_CHECKS]
