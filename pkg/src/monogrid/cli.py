"""Command-line surface.

Subcommands: gen, alpha, count, dom, idom, construct, check, verify-paper,
render, seq.  Exit codes: 0 success, 1 validation or theorem failure,
2 usage error, 3 budget exhausted.

Environment: MONOGRID_THREADS (worker count), MONOGRID_CACHE (sequence
cache path), MONOGRID_BACKEND (kernel backend).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, closed_forms, domination, regression, sequence_lab
from .config import Budget, RunConfig, default_cache_path, default_threads
from .errors import MonogridError
from .grid_core import (
    build_graph,
    dot_export,
    edge_list_export,
    monomials_export,
    parse_exponent_lines,
)
from .render import render
from .solver import (
    count_maximum_independent_sets,
    max_independent_set,
    report_to_json,
)
from .domination import domination_report_to_json

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--threads", type=int, default=None,
                        help="worker count (default: MONOGRID_THREADS or all cores)")
    parser.add_argument("--backend", choices=("auto", "cython", "pure"), default=None,
                        help="search kernel backend (default: compiled if built)")
    parser.add_argument("--max-nodes", type=int, default=None,
                        help="node budget per search task")
    parser.add_argument("--max-seconds", type=float, default=None,
                        help="wall-clock budget per solve")
    parser.add_argument("--size-cap", type=int, default=None,
                        help="vertex-count cap for graph construction")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--out", type=str, default=None, help="write output to a file")


def _config(args) -> RunConfig:
    kwargs = {}
    if args.threads is not None:
        kwargs["threads"] = args.threads
    else:
        kwargs["threads"] = default_threads()
    if args.size_cap is not None:
        kwargs["size_cap"] = args.size_cap
    if getattr(args, "backend", None) not in (None, "auto"):
        kwargs["backend"] = args.backend
    if args.max_nodes is not None or args.max_seconds is not None:
        kwargs["budget"] = Budget(args.max_nodes, args.max_seconds)
    return RunConfig(**kwargs)


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _load_highlight(graph, path):
    if path is None:
        return None
    with open(path, encoding="utf-8") as fh:
        vectors = parse_exponent_lines(fh.read())
    return graph.vertex_set_of(vectors)


# -- subcommand handlers -------------------------------------------------------


def cmd_gen(args) -> int:
    config = _config(args)
    g = build_graph(args.n, args.d, config.size_cap)
    highlight = _load_highlight(g, args.highlight)
    if args.format == "monomials":
        _emit(args, monomials_export(g))
    elif args.format == "edges":
        _emit(args, edge_list_export(g))
    else:
        _emit(args, dot_export(g, highlight))
    return EXIT_OK


def cmd_alpha(args) -> int:
    config = _config(args)
    g = build_graph(args.n, args.d, config.size_cap)
    report = max_independent_set(g, config)
    _emit(args, report_to_json(report, g))
    return EXIT_OK if report.exact else EXIT_BUDGET


def cmd_count(args) -> int:
    config = _config(args)
    g = build_graph(args.n, args.d, config.size_cap)
    report = count_maximum_independent_sets(g, config)
    _emit(args, report_to_json(report, g))
    return EXIT_OK if report.exact else EXIT_BUDGET


def cmd_dom(args) -> int:
    config = _config(args)
    g = build_graph(args.n, args.d, config.size_cap)
    report = domination.min_dominating_set(g, config, allow_large=args.allow_large)
    _emit(args, domination_report_to_json(report, g))
    return EXIT_OK if report.gamma_exact else EXIT_BUDGET


def cmd_idom(args) -> int:
    config = _config(args)
    g = build_graph(args.n, args.d, config.size_cap)
    report = domination.min_independent_dominating_set(
        g, config, allow_large=args.allow_large
    )
    _emit(args, domination_report_to_json(report, g))
    return EXIT_OK if report.idom_exact else EXIT_BUDGET


def cmd_construct(args) -> int:
    config = _config(args)
    n, d = args.n, args.d
    if n == 3:
        if d % 3:
            print(f"usage error: the n=3 construction needs 3 | d, got d={d}",
                  file=sys.stderr)
            return EXIT_USAGE
    elif n == 4:
        if d % 2:
            print(f"usage error: the n=4 construction needs 2 | d, got d={d}",
                  file=sys.stderr)
            return EXIT_USAGE
    else:
        print(f"usage error: constructions exist for n in {{3, 4}}, got n={n}",
              file=sys.stderr)
        return EXIT_USAGE
    g = build_graph(n, d, config.size_cap)
    try:
        if n == 3:
            vs = closed_forms.construct_unique_mis_3(d, g)
        else:
            vs = closed_forms.construct_unique_mis_4(d, g)
    except AssertionError as exc:  # validation gate tripped
        print(f"construction validation failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    vectors = [g.labels[v] for v in vs.sorted()]
    if args.json:
        _emit(args, json.dumps({
            "n": n, "d": d, "size": len(vectors),
            "monomials": [list(v) for v in vectors],
        }))
    else:
        _emit(args, "\n".join(v.line() for v in vectors) + "\n")
    return EXIT_OK


_CONJECTURES = ("howroyd", "unique_mod_n", "periodicity", "igamma", "i_equals_gamma")


def cmd_check(args) -> int:
    config = _config(args)
    cache = sequence_lab.SequenceCache(args.cache) if args.cache else None
    name = args.conjecture
    if name == "igamma":
        name = "i_equals_gamma"
    if name == "howroyd":
        verdict = sequence_lab.check_howroyd(args.dmax, config, cache)
    elif name == "unique_mod_n":
        verdict = sequence_lab.check_unique_mod_n(args.n, args.dmax, config, cache)
    elif name == "periodicity":
        verdict = sequence_lab.check_periodicity(args.n, args.dmax, config, cache)
    else:
        verdict = sequence_lab.check_i_equals_gamma(args.n, args.dmax, config, cache)
    payload = {
        "conjecture": verdict.conjecture,
        "n": verdict.n,
        "eventual": verdict.eventual,
        "statuses": {str(d): s for d, s in sorted(verdict.statuses.items())},
        "certificates": {str(d): cert for d, cert in sorted(verdict.certificates.items())},
    }
    if args.json:
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [f"conjecture {verdict.conjecture} (n={verdict.n})"]
        for d, status in sorted(verdict.statuses.items()):
            lines.append(f"  d={d:3d}  {status}")
            if d in verdict.certificates:
                lines.append(f"         certificate: {verdict.certificates[d]}")
        if verdict.eventual and any(s == "violated" for s in verdict.statuses.values()):
            lines.append(
                "  note: this conjecture is asserted only for all large enough d;"
                " early 'violated' rows are data, not refutations"
            )
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    config = _config(args)
    results = regression.run_all(config, stretch_seconds=args.stretch_seconds)
    if args.json:
        payload = [
            {
                "criterion": r.criterion,
                "check": r.check_id,
                "status": r.status,
                "details": r.details,
                "numbers": {k: str(v) for k, v in r.numbers.items()},
            }
            for r in results
        ]
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = []
        for r in results:
            lines.append(f"[{r.status.upper():12s}] criterion {r.criterion:2d}  {r.check_id}")
            for detail in r.details:
                lines.append(f"               {detail}")
        failed = sum(1 for r in results if r.status == "fail")
        inconclusive = sum(1 for r in results if r.status == "inconclusive")
        lines.append(
            f"{len(results)} checks: {len(results) - failed - inconclusive} passed, "
            f"{inconclusive} inconclusive, {failed} failed"
        )
        _emit(args, "\n".join(lines) + "\n")
    if any(r.status == "fail" for r in results):
        return EXIT_FAILURE
    return EXIT_OK


def cmd_render(args) -> int:
    config = _config(args)
    if args.n not in (3, 4):
        print(f"usage error: figures are drawn for n in {{3, 4}}, got n={args.n}",
              file=sys.stderr)
        return EXIT_USAGE
    g = build_graph(args.n, args.d, config.size_cap)
    highlight = _load_highlight(g, args.highlight)
    _emit(args, render(g, args.format, highlight))
    return EXIT_OK


def cmd_seq(args) -> int:
    config = _config(args)
    cache_path = args.cache if args.cache else default_cache_path()
    cache = sequence_lab.SequenceCache(cache_path)
    if args.seq_command == "compute":
        fields = tuple(f.strip() for f in args.fields.split(",") if f.strip())
        records = []
        budget_hit = False
        for d in range(args.dmin, args.dmax + 1):
            record = sequence_lab.compute_record(
                args.n, d, fields, config, cache,
                allow_large_domination=args.allow_large,
            )
            records.append(record)
            for fname in fields:
                if record.get(fname) is not None and not record.exact(fname):
                    budget_hit = True
        if args.json:
            _emit(args, "".join(
                json.dumps(r.to_json_dict()) + "\n" for r in records
            ))
        else:
            _emit(args, sequence_lab.export_records(records, "csv"))
        return EXIT_BUDGET if budget_hit else EXIT_OK
    # export
    wanted = set(range(args.dmin, args.dmax + 1))
    keys = sorted({
        (n, d) for (n, d, _f) in cache.entries
        if (args.n is None or n == args.n) and d in wanted
    })
    records = []
    for n, d in keys:
        record = sequence_lab.SequenceRecord(n=n, d=d)
        for fname in sequence_lab.FIELDS:
            entry = cache.lookup(n, d, fname)
            if entry is not None:
                setattr(record, fname, sequence_lab._entry_value(entry, fname))
                setattr(record, f"{fname}_exact", entry["exact"])
                record.elapsed_ms[fname] = entry.get("elapsed_ms", 0.0)
                record.solver_version = entry.get("solver_version", "")
        records.append(record)
    _emit(args, sequence_lab.export_records(records, args.format, args.field))
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monogrid",
        description="Exact independence and domination workbench for "
                    "monomial grid graphs.",
    )
    parser.add_argument("--version", action="version", version=f"monogrid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a graph as monomials, an edge list, or DOT")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--format", choices=("monomials", "edges", "dot"), default="monomials")
    p.add_argument("--highlight", type=str, default=None,
                   help="file of exponent lines to highlight (dot only)")
    _add_common(p)
    p.set_defaults(handler=cmd_gen)

    for name, handler, text in (
        ("alpha", cmd_alpha, "exact independence number with one witness"),
        ("count", cmd_count, "exact number of maximum independent sets"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("n", type=int)
        p.add_argument("d", type=int)
        _add_common(p)
        p.set_defaults(handler=handler)

    for name, handler, text in (
        ("dom", cmd_dom, "exact domination number"),
        ("idom", cmd_idom, "exact independent domination number"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("n", type=int)
        p.add_argument("d", type=int)
        p.add_argument("--allow-large", action="store_true",
                       help="lift the desk-scale vertex cap")
        _add_common(p)
        p.set_defaults(handler=handler)

    p = sub.add_parser("construct",
                       help="explicit unique maximum independent set (n=3: 3|d; n=4: 2|d)")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    _add_common(p)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("check", help="evaluate one conjecture over a degree range")
    p.add_argument("conjecture", choices=_CONJECTURES)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--dmax", type=int, default=11)
    p.add_argument("--cache", type=str, default=None)
    _add_common(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("verify-paper", help="run the full regression suite")
    p.add_argument("--stretch-seconds", type=float, default=300.0,
                   help="budget for the stretch uniqueness count (0 skips it)")
    _add_common(p)
    p.set_defaults(handler=cmd_verify_paper)

    p = sub.add_parser("render", help="draw the graph as SVG or TikZ")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--highlight", type=str, default=None,
                   help="file of exponent lines to fill red")
    p.add_argument("--format", choices=("svg", "tikz"), default="svg")
    _add_common(p)
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser("seq", help="compute and export cached sequence records")
    seq_sub = p.add_subparsers(dest="seq_command", required=True)
    pc = seq_sub.add_parser("compute", help="fill the cache for a degree range")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--dmin", type=int, default=0)
    pc.add_argument("--dmax", type=int, required=True)
    pc.add_argument("--fields", type=str, default="alpha,count")
    pc.add_argument("--cache", type=str, default=None)
    pc.add_argument("--allow-large", action="store_true")
    _add_common(pc)
    pc.set_defaults(handler=cmd_seq)
    pe = seq_sub.add_parser("export", help="export cached records")
    pe.add_argument("--format", choices=("csv", "jsonl", "bfile"), required=True)
    pe.add_argument("--field", choices=sequence_lab.FIELDS, default=None,
                    help="sequence field for b-file export")
    pe.add_argument("--n", type=int, default=None)
    pe.add_argument("--dmin", type=int, default=0)
    pe.add_argument("--dmax", type=int, default=10 ** 6)
    pe.add_argument("--cache", type=str, default=None)
    _add_common(pe)
    pe.set_defaults(handler=cmd_seq)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except MonogridError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
