"""Command-line interface.

Exit codes: 0 success / verdict reached, 2 analysis undecided, 1 error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .filtering import ObstructionPattern, ObstructionSet, filter_graphs
from .gen import (
    EnumerationSpec,
    enumerate_disconnected_regular,
    enumerate_regular,
    graph_to_graph6,
    read_edge_list,
    read_graph6,
    write_graph6,
)
from .graphs import Graph
from .representations import read_representation, verify_representation
from .scenarios import SCENARIO_NAMES, ScenarioConfig, emit_report, run_scenario
from .solver import solve_for
from .spanning import check_single_party_spanning


def _load_graph(spec: str) -> Graph:
    path = Path(spec)
    if path.exists():
        if path.suffix == ".g6":
            return next(iter(read_graph6(path)))
        return next(iter(read_edge_list(path)))
    return catalog.get_graph(spec)


def _cmd_generate(args) -> int:
    connectivity = "connected" if args.connected else "all"
    if args.disconnected:
        graphs = enumerate_disconnected_regular(args.n, args.r)
    else:
        spec = EnumerationSpec(args.n, args.r, connectivity, args.girth_min)
        graphs = enumerate_regular(spec)
    if args.output:
        count = write_graph6(args.output, graphs)
        print(f"{count} graphs -> {args.output}")
    else:
        count = 0
        for g in graphs:
            print(graph_to_graph6(g))
            count += 1
        print(f"# {count} graphs", file=sys.stderr)
    return 0


def _obstruction_set(name: str) -> ObstructionSet:
    from .scenarios import obstruction_set_cubic, obstruction_set_o3, obstruction_set_o3_hat

    named = {
        "O3": obstruction_set_o3,
        "O3hat": obstruction_set_o3_hat,
        "cubic": obstruction_set_cubic,
    }
    if name in named:
        return named[name]()
    path = Path(name)
    if path.exists():
        patterns = [
            ObstructionPattern(f"pattern{i}", g, str(path))
            for i, g in enumerate(read_edge_list(path))
        ]
        return ObstructionSet(0, patterns)
    raise SystemExit(f"unknown obstruction set {name!r} (use O3, O3hat, cubic or a file)")


def _cmd_filter(args) -> int:
    graphs = list(read_graph6(args.input))
    obs = _obstruction_set(args.obstructions)
    report = filter_graphs(graphs, obs, full_counts=args.full_counts, workers=args.workers)
    print(report.to_markdown())
    print(f"survivors: {len(report.survivors)}")
    if args.survivors_out:
        write_graph6(args.survivors_out, [s.graph for s in report.survivors])
    return 0


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    verdict = solve_for(
        g,
        args.d,
        restarts=args.restarts,
        iters=args.iters,
        seed=args.seed,
        real=args.real,
    )
    print(f"outcome: {verdict.outcome}")
    if verdict.universally_forced:
        print("forced classes:", [sorted(c) for c in verdict.universally_forced])
    for step in verdict.proof:
        print(f"  [{step.rule}] {step.detail}")
    if verdict.outcome == "unknown":
        print(f"restarts used: {verdict.restarts_used}, best residual: {verdict.best_residual:.3e}")
        return 2
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    rep = read_representation(args.rep)
    report = verify_representation(g, rep)
    if report.passed:
        print("pass")
        return 0
    for v in report.violations:
        print(f"violation: {v.kind} at ({v.u},{v.v}), |overlap|={v.magnitude:.3e}")
    return 1


def _cmd_span(args) -> int:
    rep = read_representation(args.rep)
    result = check_single_party_spanning(rep, args.k, args.d, args.parties)
    print("satisfied" if result.satisfied else f"violated: {result.witness}")
    return 0 if result.satisfied else 2


def _cmd_scenario(args) -> int:
    config = ScenarioConfig(
        seed=args.seed,
        ingest_dir=args.ingest,
        numeric_sweep=args.numeric_sweep,
        workers=args.workers,
    )
    ev = run_scenario(args.name, config)
    fmt = "markdown" if args.report and args.report.endswith(".md") else "json"
    text = emit_report(ev, fmt)
    if args.report:
        Path(args.report).write_text(text)
        print(f"report -> {args.report}")
    else:
        print(text)
    print(f"status: {ev.status}; verdict: {ev.verdict}", file=sys.stderr)
    if ev.status == "verdict-reached":
        return 0
    if ev.status == "undecided":
        return 2
    return 1


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.graph_names():
            entry = catalog.get_entry(name)
            print(f"{name:12s} n={entry.graph.n:2d}  {entry.provenance}")
        print("-- fixtures --")
        for name in catalog.fixture_names():
            fx = catalog.get_fixture(name)
            print(f"{name:16s} d={fx.d} vectors={len(fx.vectors)} graph={fx.associated_graph}")
        return 0
    g = catalog.get_graph(args.name)
    if args.format == "graph6":
        print(graph_to_graph6(g))
    else:
        print(f"n={g.n}")
        print(" ".join(f"{u}-{v}" for u, v in g.edges()))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="gupblab")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="enumerate regular graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--disconnected", action="store_true")
    p.add_argument("--girth-min", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("filter", help="apply an obstruction set to a graph6 file")
    p.add_argument("--input", required=True)
    p.add_argument("--obstructions", required=True)
    p.add_argument("--full-counts", action="store_true")
    p.add_argument("--survivors-out")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_filter)

    p = sub.add_parser("solve", help="search for a faithful orthogonal representation")
    p.add_argument("--graph", required=True, help="catalog name or file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--iters", type=int, default=3000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--real", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="verify a representation file against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--rep", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("span", help="single-party spanning check of a representation")
    p.add_argument("--rep", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", dest="parties", type=int, required=True)
    p.set_defaults(func=_cmd_span)

    p = sub.add_parser("scenario", help="run a named analysis end to end")
    p.add_argument("name", choices=SCENARIO_NAMES)
    p.add_argument("--ingest", default=None, help="directory of graph6 inputs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", default=None, help="output path (.json or .md)")
    p.add_argument("--numeric-sweep", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_scenario)

    p = sub.add_parser("catalog", help="list or dump named graphs")
    p.add_argument("action", choices=["list", "dump"])
    p.add_argument("name", nargs="?")
    p.add_argument("--format", choices=["graph6", "edges"], default="edges")
    p.set_defaults(func=_cmd_catalog)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
