"""Sequence computation, caching, conjecture evaluation and export.

Records hold, per (n, d): the independence number, the number of maximum
independent sets, and the two domination numbers, each with an exactness
flag.  The cache is append-only JSON lines keyed by (n, d, field); an
entry is only superseded when the newcomer is exact and the incumbent is
not, and two disagreeing exact entries refuse to coexist.

Conjecture verdicts are three-valued per degree: consistent, violated or
inconclusive; an inexact field never supports a verdict, and violations
carry machine-checkable certificates.
"""

from __future__ import annotations

import io
import json
import os
from dataclasses import dataclass, field
from time import monotonic

from . import __version__
from ._kernels import get_backend
from .config import DEFAULT, RunConfig
from .domination import min_dominating_set, min_independent_dominating_set
from .errors import CacheConflictError, CapacityError, DomainError
from .grid_core import ExponentVector, build_graph
from .solver import (
    count_maximum_independent_sets,
    enumerate_maximum_independent_sets,
    max_independent_set,
)

FIELDS = ("alpha", "count", "gamma", "idom")


def solver_version(config: RunConfig = DEFAULT) -> str:
    return f"monogrid-{__version__}-{get_backend(config.backend).BACKEND_NAME}"


@dataclass
class SequenceRecord:
    """Computed values for one (n, d); absent fields are None."""

    n: int
    d: int
    alpha: int | None = None
    count: int | None = None
    gamma: int | None = None
    idom: int | None = None
    alpha_exact: bool = False
    count_exact: bool = False
    gamma_exact: bool = False
    idom_exact: bool = False
    elapsed_ms: dict = field(default_factory=dict)
    solver_version: str = ""

    def get(self, name: str):
        return getattr(self, name)

    def exact(self, name: str) -> bool:
        return getattr(self, f"{name}_exact")

    def elapsed_total_ms(self) -> float:
        return round(sum(self.elapsed_ms.values()), 3)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "alpha": self.alpha,
            "count": str(self.count) if self.count is not None else None,
            "gamma": self.gamma,
            "idom": self.idom,
            "alpha_exact": self.alpha_exact,
            "count_exact": self.count_exact,
            "gamma_exact": self.gamma_exact,
            "idom_exact": self.idom_exact,
            "elapsed_ms": self.elapsed_ms,
            "solver_version": self.solver_version,
        }


class SequenceCache:
    """Append-only JSONL cache of per-(n, d, field) results."""

    def __init__(self, path: str | None):
        self.path = path
        self.entries: dict[tuple[int, int, str], dict] = {}
        if path and os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                for lineno, raw in enumerate(fh, start=1):
                    line = raw.strip()
                    if not line:
                        continue
                    try:
                        entry = json.loads(line)
                        key = (int(entry["n"]), int(entry["d"]), entry["field"])
                    except (ValueError, KeyError) as exc:
                        raise CacheConflictError(
                            f"{path}:{lineno}: unreadable cache line ({exc})"
                        ) from exc
                    self._fold(key, entry, f"{path}:{lineno}")

    def _fold(self, key, entry, where: str):
        old = self.entries.get(key)
        if old is None:
            self.entries[key] = entry
            return True
        if old["exact"] and entry["exact"] and old["value"] != entry["value"]:
            raise CacheConflictError(
                f"{where}: exact entries disagree for {key}: "
                f"{old['value']} vs {entry['value']}; refusing to overwrite"
            )
        if entry["exact"] and not old["exact"]:
            self.entries[key] = entry
            return True
        return False

    def lookup(self, n: int, d: int, fname: str) -> dict | None:
        return self.entries.get((n, d, fname))

    def store(self, n: int, d: int, fname: str, value, exact: bool,
              elapsed_ms: float, version: str):
        entry = {
            "n": n,
            "d": d,
            "field": fname,
            "value": str(value) if fname == "count" else value,
            "exact": bool(exact),
            "elapsed_ms": round(elapsed_ms, 3),
            "solver_version": version,
        }
        accepted = self._fold((n, d, fname), entry, self.path or "<memory>")
        if accepted and self.path:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry) + "\n")
        return accepted


def _entry_value(entry: dict, fname: str):
    value = entry["value"]
    if fname == "count" and value is not None:
        return int(value)
    return value


def compute_record(
    n: int,
    d: int,
    fields: tuple[str, ...] = ("alpha", "count"),
    config: RunConfig = DEFAULT,
    cache: SequenceCache | None = None,
    allow_large_domination: bool = False,
) -> SequenceRecord:
    """Compute (or pull from cache) the requested fields for G(n, d).

    Exact cache entries are reused; anything else is recomputed under the
    configured budget and, when exact, upgrades the cache.
    """
    unknown = set(fields) - set(FIELDS)
    if unknown:
        raise DomainError(f"unknown fields {sorted(unknown)}; valid: {FIELDS}")
    version = solver_version(config)
    record = SequenceRecord(n=n, d=d, solver_version=version)
    wanted = list(dict.fromkeys(fields))
    if "count" in wanted and "alpha" not in wanted:
        wanted.insert(0, "alpha")

    def from_cache(fname: str) -> bool:
        if cache is None:
            return False
        entry = cache.lookup(n, d, fname)
        if entry is None or not entry["exact"]:
            return False
        setattr(record, fname, _entry_value(entry, fname))
        setattr(record, f"{fname}_exact", True)
        record.elapsed_ms[fname] = 0.0
        return True

    def remember(fname: str, value, exact: bool, elapsed_ms: float):
        setattr(record, fname, value)
        setattr(record, f"{fname}_exact", exact)
        record.elapsed_ms[fname] = round(elapsed_ms, 3)
        if cache is not None and value is not None:
            cache.store(n, d, fname, value, exact, elapsed_ms, version)

    graph = None

    def need_graph():
        nonlocal graph
        if graph is None:
            graph = build_graph(n, d, config.size_cap)
        return graph

    if "count" in wanted:
        if not (from_cache("alpha") and from_cache("count")):
            started = monotonic()
            report = count_maximum_independent_sets(need_graph(), config)
            elapsed = (monotonic() - started) * 1000.0
            remember("alpha", report.objective, report.exact, elapsed / 2)
            remember("count", report.count, report.exact, elapsed / 2)
        wanted = [f for f in wanted if f not in ("alpha", "count")]
    if "alpha" in wanted:
        if not from_cache("alpha"):
            started = monotonic()
            report = max_independent_set(need_graph(), config)
            remember("alpha", report.objective, report.exact,
                     (monotonic() - started) * 1000.0)
        wanted.remove("alpha")
    for fname in wanted:
        if from_cache(fname):
            continue
        started = monotonic()
        try:
            if fname == "gamma":
                rep = min_dominating_set(need_graph(), config, allow_large_domination)
                remember("gamma", rep.gamma, rep.gamma_exact,
                         (monotonic() - started) * 1000.0)
            else:
                rep = min_independent_dominating_set(
                    need_graph(), config, allow_large_domination
                )
                remember("idom", rep.idom, rep.idom_exact,
                         (monotonic() - started) * 1000.0)
        except CapacityError:
            record.elapsed_ms[fname] = 0.0
    if record.count is not None and record.alpha is None:
        raise AssertionError("count present without alpha")
    return record


# -- conjecture checks --------------------------------------------------------


@dataclass(frozen=True)
class ConjectureVerdict:
    """Per-degree statuses for one conjecture over a checked range.

    ``eventual`` marks conjectures asserted only for large enough d, where
    early "violated" rows are data points rather than refutations.
    """

    conjecture: str
    n: int | None
    statuses: dict[int, str]
    certificates: dict[int, object]
    eventual: bool = False

    def counts(self) -> dict[str, int]:
        out = {"consistent": 0, "violated": 0, "inconclusive": 0}
        for status in self.statuses.values():
            out[status] += 1
        return out


def _status(value, exact: bool, expected) -> str:
    if value is None or not exact:
        return "inconclusive"
    return "consistent" if value == expected else "violated"


def check_howroyd(
    d_max: int, config: RunConfig = DEFAULT, cache: SequenceCache | None = None
) -> ConjectureVerdict:
    """Compare a_3(d) for 9 <= d <= d_max against the 3-periodic pattern
    1, 27, 27; the d = 0 (mod 3) rows are also settled by the uniqueness
    theorem, so a violation there is a hard failure, not just data."""
    statuses: dict[int, str] = {}
    certificates: dict[int, object] = {}
    for d in range(9, d_max + 1):
        record = compute_record(3, d, ("alpha", "count"), config, cache)
        expected = 1 if d % 3 == 0 else 27
        status = _status(record.count, record.count_exact, expected)
        statuses[d] = status
        if status == "violated":
            certificates[d] = {"d": d, "count": str(record.count), "expected": expected}
    return ConjectureVerdict("howroyd", 3, statuses, certificates)


def check_unique_mod_n(
    n: int, d_max: int, config: RunConfig = DEFAULT,
    cache: SequenceCache | None = None,
) -> ConjectureVerdict:
    """a_n(d) = 1 whenever n | d (conjectured for all large enough d)."""
    statuses: dict[int, str] = {}
    certificates: dict[int, object] = {}
    for d in range(0, d_max + 1, n):
        record = compute_record(n, d, ("alpha", "count"), config, cache)
        status = _status(record.count, record.count_exact, 1)
        statuses[d] = status
        if status == "violated":
            graph = build_graph(n, d, config.size_cap)
            pair = enumerate_maximum_independent_sets(graph, 2, config)
            certificates[d] = {
                "d": d,
                "count": str(record.count),
                "two_sets": [
                    [list(graph.labels[v]) for v in w.sorted()]
                    for w in pair.witnesses
                ],
            }
    return ConjectureVerdict("unique_mod_n", n, statuses, certificates, eventual=True)


def check_periodicity(
    n: int, d_max: int, config: RunConfig = DEFAULT,
    cache: SequenceCache | None = None,
) -> ConjectureVerdict:
    """a_n(d) = a_n(d + n) over the exact window (conjectured eventually)."""
    statuses: dict[int, str] = {}
    certificates: dict[int, object] = {}
    records = {
        d: compute_record(n, d, ("alpha", "count"), config, cache)
        for d in range(0, d_max + 1)
    }
    for d in range(0, d_max - n + 1):
        a, b = records[d], records[d + n]
        if not (a.count_exact and b.count_exact):
            statuses[d] = "inconclusive"
            continue
        if a.count == b.count:
            statuses[d] = "consistent"
        else:
            statuses[d] = "violated"
            certificates[d] = {
                "d": d,
                "count_d": str(a.count),
                "count_d_plus_n": str(b.count),
            }
    return ConjectureVerdict("periodicity", n, statuses, certificates, eventual=True)


def check_i_equals_gamma(
    n: int, d_max: int, config: RunConfig = DEFAULT,
    cache: SequenceCache | None = None,
) -> ConjectureVerdict:
    """gamma_n(d) = i_n(d) per degree, with witness certificates on violation."""
    statuses: dict[int, str] = {}
    certificates: dict[int, object] = {}
    for d in range(0, d_max + 1):
        record = compute_record(n, d, ("gamma", "idom"), config, cache)
        if record.gamma is None or record.idom is None or not (
            record.gamma_exact and record.idom_exact
        ):
            statuses[d] = "inconclusive"
            continue
        if record.gamma == record.idom:
            statuses[d] = "consistent"
        else:
            from .domination import check_igamma_conjecture

            graph = build_graph(n, d, config.size_cap)
            check = check_igamma_conjecture(graph, config, n=n, d=d)
            statuses[d] = "consistent" if check.equal else "violated"
            if not check.equal:
                certificates[d] = {
                    "d": d,
                    "gamma": check.gamma,
                    "idom": check.idom,
                    "gamma_witness": [
                        list(graph.labels[v]) for v in check.gamma_witness.sorted()
                    ],
                    "idom_witness": [
                        list(graph.labels[v]) for v in check.idom_witness.sorted()
                    ],
                    "oracle_checked": check.oracle_checked,
                }
    return ConjectureVerdict("i_equals_gamma", n, statuses, certificates)


def check_small_d_proposition(n_max: int, config: RunConfig = DEFAULT) -> dict:
    """a_n(0) = 1, a_n(1) = n, a_n(2) = 1 with the n squares as the unique
    d = 2 maximum independent set, for 1 <= n <= n_max."""
    results = {}
    for n in range(1, n_max + 1):
        row = {}
        for d, expected in ((0, 1), (1, n), (2, 1)):
            graph = build_graph(n, d, config.size_cap)
            report = count_maximum_independent_sets(graph, config)
            row[f"count_d{d}"] = report.count
            row[f"count_d{d}_ok"] = report.exact and report.count == expected
        graph = build_graph(n, 2, config.size_cap)
        enum = enumerate_maximum_independent_sets(graph, 2, config)
        squares = {
            ExponentVector([2 if j == i else 0 for j in range(n)]) for i in range(n)
        }
        row["squares_witness_ok"] = (
            enum.exact
            and len(enum.witnesses) == 1
            and {graph.labels[v] for v in enum.witnesses[0]} == squares
        )
        results[n] = row
    return results


# -- export -------------------------------------------------------------------

CSV_COLUMNS = (
    "n,d,alpha,count,gamma,idom,alpha_exact,count_exact,gamma_exact,idom_exact,"
    "elapsed_ms_total,solver_version"
)


def export_records(records, fmt: str, bfile_field: str | None = None) -> str:
    """Render records as csv, jsonl, or a single-sequence OEIS-style b-file.

    Output is deterministic: rows sorted by (n, d).  A b-file needs a
    single field and a single n.
    """
    records = sorted(records, key=lambda r: (r.n, r.d))
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(CSV_COLUMNS + "\n")
        for r in records:
            cells = [
                str(r.n), str(r.d),
                "" if r.alpha is None else str(r.alpha),
                "" if r.count is None else str(r.count),
                "" if r.gamma is None else str(r.gamma),
                "" if r.idom is None else str(r.idom),
                str(r.alpha_exact).lower(), str(r.count_exact).lower(),
                str(r.gamma_exact).lower(), str(r.idom_exact).lower(),
                str(r.elapsed_total_ms()), r.solver_version,
            ]
            buf.write(",".join(cells) + "\n")
        return buf.getvalue()
    if fmt == "jsonl":
        return "".join(json.dumps(r.to_json_dict()) + "\n" for r in records)
    if fmt == "bfile":
        if bfile_field not in FIELDS:
            raise DomainError(f"b-file export needs a field out of {FIELDS}")
        ns = {r.n for r in records}
        if len(ns) > 1:
            raise DomainError(f"b-file export needs a single n, got {sorted(ns)}")
        lines = []
        for r in records:
            value = r.get(bfile_field)
            if value is None or not r.exact(bfile_field):
                continue
            lines.append(f"{r.d} {value}")
        return "\n".join(lines) + ("\n" if lines else "")
    raise DomainError(f"unknown export format {fmt!r}; use csv, jsonl or bfile")
