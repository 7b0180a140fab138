"""Command-line entry point: ``python3 -m cleangraph <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .clean import cl1, cl2, clean_graph, idempotent_graph, tables
from .config import DEFAULT_ISO_BUDGET
from .errors import BudgetError, InconclusiveError, ParamError, SpecError
from .formats import export_dot, export_graph6
from .graphs import Graph, shuriken
from .iso import is_isomorphic
from .rings import build_ring
from .spec_parser import parse_ring_spec
from .theorems import ANCHORS, run_suite

EXIT_OK, EXIT_NON_ISO, EXIT_INCONCLUSIVE, EXIT_SPEC, EXIT_BUDGET = 0, 1, 2, 3, 4
GRAPHS = ("cl", "cl1", "cl2", "idem", "shuriken")


def _ring_tables(text: str):
    return tables(build_ring(parse_ring_spec(text)))


def _graph(tab, kind: str, t: int | None = None, n: int | None = None) -> Graph:
    if kind == "cl":
        return clean_graph(tab)
    if kind == "cl1":
        return cl1(tab)
    if kind == "cl2":
        return cl2(tab)
    base = idempotent_graph(tab)
    if kind == "idem":
        return base
    t = len(tab.units.involutions) if t is None else t
    n = len(tab.units) if n is None else n
    return shuriken(t, n, base)


def _stats(g: Graph) -> str:
    degs = g.degrees()
    lines = [f"vertices: {g.order}", f"edges: {g.size}",
             f"components: {len(g.components())}"]
    if degs:
        lines.append(f"degree range: {min(degs)}..{max(degs)}")
    return "\n".join(lines) + "\n"


def _cmd_build(args, out: TextIO) -> int:
    tab = _ring_tables(args.ring)
    g = _graph(tab, args.graph, args.t, args.n)
    if args.format == "dot":
        out.write(export_dot(g))
    elif args.format == "graph6":
        out.write(export_graph6(g).decode("ascii") + "\n")
    else:
        out.write(_stats(g))
    return EXIT_OK


def _cmd_iso(args, out: TextIO) -> int:
    g1 = _graph(_ring_tables(args.ring_a), args.graph_a)
    g2 = _graph(_ring_tables(args.ring_b), args.graph_b)
    try:
        res = is_isomorphic(g1, g2, args.budget)
    except InconclusiveError as exc:
        out.write(f"inconclusive after {exc.search_nodes} search nodes\n")
        return EXIT_INCONCLUSIVE
    if res.verdict:
        out.write(f"isomorphic ({g1.order} vertices, {res.search_nodes} search nodes)\n")
        return EXIT_OK
    reason = f"screened by {res.screened_by}" if res.screened_by else f"{res.search_nodes} search nodes"
    out.write(f"not isomorphic ({reason})\n")
    return EXIT_NON_ISO


def _cmd_verify(args, out: TextIO) -> int:
    reports = run_suite([args.claim] if args.claim else None, bound=args.bound)
    for r in reports:
        out.write(f"{r.claim_id:<22} {r.suite_verdict:<12} {r.instances_checked:>5} instances "
                  f"{r.wall_time:7.2f}s\n")
        for inst in r.failures():
            out.write(f"    {inst.key}: {inst.verdict} {json.dumps(inst.counterexample)}\n")
        for note in r.notes:
            out.write(f"    note: {note}\n")
    if args.json:
        doc = [r.to_dict() for r in reports]
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
    return EXIT_OK if all(r.passed for r in reports) else 1


def _cmd_info(args, out: TextIO) -> int:
    tab = _ring_tables(args.ring)
    r = tab.ring
    rows = [("|R|", r.order), ("|Id|", len(tab.ids.idempotents)),
            ("|U|", len(tab.units)), ("|U'|", len(tab.units.involutions))]
    for name, value in rows:
        out.write(f"{name:<5} {value}\n")
    out.write("O_e:\n")
    for e in tab.ids.nonzero:
        out.write(f"  {r.label(e)}: {tab.ids.ortho_count[e]}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cleangraph", description="Clean graphs of finite rings.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a graph and print it")
    b.add_argument("--ring", required=True)
    b.add_argument("--graph", required=True, choices=GRAPHS)
    b.add_argument("--t", type=int, help="shuriken t (default |U'|)")
    b.add_argument("--n", type=int, help="shuriken n (default |U|)")
    b.add_argument("--format", default="stats", choices=("dot", "graph6", "stats"))
    b.set_defaults(func=_cmd_build)

    i = sub.add_parser("iso", help="decide isomorphism of two graphs")
    i.add_argument("--ring-a", required=True)
    i.add_argument("--graph-a", required=True, choices=GRAPHS)
    i.add_argument("--ring-b", required=True)
    i.add_argument("--graph-b", required=True, choices=GRAPHS)
    i.add_argument("--budget", type=int, default=DEFAULT_ISO_BUDGET)
    i.set_defaults(func=_cmd_iso)

    v = sub.add_parser("verify", help="run the theorem suite")
    v.add_argument("--claim", choices=sorted(ANCHORS))
    v.add_argument("--bound", type=int, default=200)
    v.add_argument("--json", metavar="PATH")
    v.set_defaults(func=_cmd_verify)

    f = sub.add_parser("info", help="ring counts")
    f.add_argument("--ring", required=True)
    f.set_defaults(func=_cmd_info)
    return ap


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except SpecError as exc:
        err.write(f"spec error [{exc.code}]: {exc}\n")
        return EXIT_SPEC
    except ParamError as exc:
        err.write(f"parameter error: {exc}\n")
        return EXIT_SPEC
    except BudgetError as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())
