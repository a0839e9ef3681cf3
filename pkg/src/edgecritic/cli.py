"""Command-line front end.

Exit codes: 0 success / all checks passed, 1 a check failed, 2 usage or
input error, 3 a check was left undecided within the time budget.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .coloring import ColoringError
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .graphs import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    complete_minus_matching,
    cube,
    cycle,
    is_overfull,
    petersen,
    petersen_minus_vertex,
    prism,
    split_spec,
    vertex_split,
)
from .lemmas import lemma_battery
from .records import RecordError, VerificationRecord, tally_verdicts
from .solver import (
    SearchBudgetExceeded,
    chromatic_index,
    critical_edge_report,
    find_coloring,
)
from .verifier import (
    SweepConfig,
    reproduce_nonelementary_path,
    run_sweep,
)

_NAMED_BUILDERS = {
    "petersen": petersen,
    "petersen_minus_vertex": petersen_minus_vertex,
    "prism": prism,
    "cube": cube,
    "k33": lambda: complete_bipartite(3, 3),
    "k8_minus_pm": lambda: complete_minus_matching(8),
}


def build_named(name: str) -> Graph:
    fn = _NAMED_BUILDERS.get(name)
    if fn is not None:
        return fn()
    m = re.fullmatch(r"k(\d+)", name)
    if m:
        return complete(int(m.group(1)))
    m = re.fullmatch(r"c(\d+)", name)
    if m:
        return cycle(int(m.group(1)))
    known = ", ".join(sorted(_NAMED_BUILDERS) + ["kN", "cN"])
    raise GraphError(f"unknown builder {name!r} (known: {known})")


def _load_graphs(args) -> list[tuple[str, Graph]]:
    """(label, graph) pairs from builder, literal, file, or stdin."""
    if getattr(args, "builder", None):
        return [(args.builder, build_named(args.builder))]
    if getattr(args, "graph6", None):
        return [(args.graph6, parse_graph6(args.graph6))]
    if getattr(args, "file", None):
        with open(args.file, encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    else:
        lines = [ln.strip() for ln in sys.stdin if ln.strip()]
    if not lines:
        raise GraphError("no input graphs")
    return [(ln, parse_graph6(ln)) for ln in lines]


def _input_flags(sub) -> None:
    sub.add_argument("--builder", help="named graph (petersen, k33, kN, cN, ...)")
    sub.add_argument("--graph6", help="one graph6 string")
    sub.add_argument("--file", help="file of graph6 strings, one per line")


def _record_exit(records: list[VerificationRecord]) -> int:
    tally = tally_verdicts(records)
    if tally["fail"]:
        return 1
    if tally["undecided"]:
        return 3
    return 0


def _emit_records(records: list[VerificationRecord], as_json: bool) -> None:
    if as_json:
        for rec in records:
            print(rec.to_json_line())
        return
    for rec in records:
        print(f"{rec.verdict:9s} {rec.lemma}  {rec.instance_id}")
        if rec.verdict == "fail" and rec.witness is not None:
            print(f"          witness: {json.dumps(rec.witness, sort_keys=True)}")
    t = tally_verdicts(records)
    print(f"total={len(records)} pass={t['pass']} fail={t['fail']}"
          f" skipped={t['skipped']} undecided={t['undecided']}")


def _cmd_chi(args) -> int:
    batch = not (args.builder or args.graph6)
    for label, g in _load_graphs(args):
        delta = g.max_degree()
        ci = chromatic_index(g, args.budget_ms)
        cls = 1 if ci == delta else 2
        if args.json:
            print(json.dumps({"graph6": emit_graph6(g), "max_degree": delta,
                              "chromatic_index": ci, "class": cls}, sort_keys=True))
        else:
            prefix = f"{label} " if batch else ""
            print(f"{prefix}Δ={delta} χ'={ci} class={cls}")
    return 0


def _cmd_color(args) -> int:
    batch = not (args.builder or args.graph6)
    for label, g in _load_graphs(args):
        k = chromatic_index(g, args.budget_ms)
        phi = find_coloring(g, k, budget_ms=args.budget_ms)
        if args.json:
            print(json.dumps({"graph6": emit_graph6(g), "k": k,
                              "edges": [[u, v, c] for (u, v), c in phi.colored_items()]},
                             sort_keys=True))
        else:
            if batch:
                print(label)
            print(phi.to_text())
    return 0


def _cmd_critical(args) -> int:
    batch = not (args.builder or args.graph6)
    for label, g in _load_graphs(args):
        ok, crit = critical_edge_report(g, args.budget_ms)
        if args.json:
            print(json.dumps({"graph6": emit_graph6(g), "delta_critical": ok,
                              "critical_edges": [list(e) for e in crit],
                              "edge_count": g.edge_count()}, sort_keys=True))
        else:
            prefix = f"{label} " if batch else ""
            word = "true" if ok else "false"
            print(f"{prefix}delta-critical: {word}"
                  f" ({len(crit)}/{g.edge_count()} edges critical)")
    return 0


def _cmd_split(args) -> int:
    graphs = _load_graphs(args)
    if len(graphs) != 1:
        raise GraphError("split works on exactly one graph")
    _, g = graphs[0]
    part_a = tuple(int(t) for t in args.part_a.split(",") if t != "")
    nbrs = g.neighbors(args.vertex)
    part_b = tuple(sorted(nbrs - set(part_a)))
    spec = split_spec(args.vertex, part_a, part_b)
    split = vertex_split(g, spec)
    payload = {
        "graph6": emit_graph6(split),
        "n": split.n,
        "edges": split.edge_count(),
        "split_edge": [args.vertex, g.n],
        "overfull": is_overfull(split),
    }
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        word = "true" if payload["overfull"] else "false"
        print(f"{payload['graph6']} n={split.n} edges={payload['edges']}"
              f" split-edge={args.vertex}-{g.n} overfull={word}")
    return 0


def _cmd_lemmas(args) -> int:
    records: list[VerificationRecord] = []
    for _, g in _load_graphs(args):
        records.extend(lemma_battery(g, args.budget_ms))
    _emit_records(records, args.json)
    return _record_exit(records)


def _sweep_command(args, mode: str) -> int:
    degrees = None
    if getattr(args, "degrees", None):
        degrees = tuple(int(t) for t in args.degrees.split(",") if t != "")
        mode = "custom"
    config = SweepConfig(m_max=args.m_max, mode=mode, degrees=degrees,
                         budget_ms=args.budget_ms, jobs=args.jobs,
                         long_haul=args.long)
    records = run_sweep(config, log_path=args.log, resume=args.resume)
    _emit_records(records, args.json)
    return _record_exit(records)


def _cmd_figure1(args) -> int:
    rec = reproduce_nonelementary_path(args.budget_ms)
    if args.json:
        print(rec.to_json_line())
    else:
        print(f"{rec.verdict}: {rec.lemma}")
        if rec.witness:
            w = rec.witness
            print(f"hole edge: {w['edge'][0]}-{w['edge'][1]}")
            print(f"path: {'-'.join(map(str, w['path']))}")
            print(f"color {w['shared_color']} missing at both"
                  f" {w['shared_between'][0]} and {w['shared_between'][1]}")
            print(f"inner degrees: {w['inner_degrees']}")
            print(w["coloring"])
    if rec.verdict == "pass":
        return 0
    return 3 if rec.verdict in ("undecided", "skipped") else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgecritic",
        description="edge-coloring criticality toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, inputs=True):
        if inputs:
            _input_flags(p)
        p.add_argument("--json", action="store_true", help="machine output")
        p.add_argument("--budget-ms", type=float, default=60000.0,
                       help="solver time budget per decision (default 60000)")

    p = sub.add_parser("chi", help="chromatic index and class")
    common(p)
    p.set_defaults(fn=_cmd_chi)

    p = sub.add_parser("color", help="print an optimal proper edge coloring")
    common(p)
    p.set_defaults(fn=_cmd_color)

    p = sub.add_parser("critical", help="criticality of every edge")
    common(p)
    p.set_defaults(fn=_cmd_critical)

    p = sub.add_parser("split", help="split a vertex into an adjacent pair")
    common(p)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--part-a", required=True,
                   help="comma list of neighbors kept on the original id")
    p.set_defaults(fn=_cmd_split)

    p = sub.add_parser("lemmas", help="run every adjacency-lemma check")
    common(p)
    p.set_defaults(fn=_cmd_lemmas)

    for verb, mode, blurb in (
            ("theorem1", "theorem", "verify splits in the high-degree range"),
            ("sweep", "conjecture", "sweep splits over the conjectured range")):
        p = sub.add_parser(verb, help=blurb)
        common(p, inputs=False)
        p.add_argument("--m-max", type=int, default=8,
                       help="largest base order (even, default 8)")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--log", help="JSON-lines record log path")
        p.add_argument("--resume", action="store_true",
                       help="continue an interrupted log")
        p.add_argument("--long", action="store_true",
                       help="allow the multi-hour order-10 bases")
        if verb == "sweep":
            p.add_argument("--degrees", help="comma list restricting base degrees")
        p.set_defaults(fn=lambda a, m=mode: _sweep_command(a, m))

    p = sub.add_parser("figure1",
                       help="find the non-elementary structured path witness")
    common(p, inputs=False)
    p.set_defaults(fn=_cmd_figure1)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except SearchBudgetExceeded:
        print("error: time budget exhausted before a verdict", file=sys.stderr)
        return 3
    except (GraphError, Graph6Error, ColoringError, RecordError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
