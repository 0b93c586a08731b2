"""Command-line front end.

Subcommands cover every capability: critical-group structure (``jac``),
class orders (``order``), generator tests (``gen``), edge-surgery law
checking (``check``), contraction checking (``contract``), order lower
bounds (``bounds``), the Monte Carlo experiments (``experiment``), and
the exhaustive biconnected scan (``scan-conjecture``).

Machine-readable output (json/csv) goes to stdout only; diagnostics and
timings go to stderr.  Exit codes: 0 all requested checks pass, 1 a
check failed, 2 input could not be parsed, 3 the graph (or a required
modified graph) is disconnected.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import experiments, jacobian, theorems
from .multigraph import (
    DisconnectedGraphError,
    GraphParseError,
    is_connected,
    parse_graph,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_DISCONNECTED = 3


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphParseError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def _emit(doc, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        _emit_text(doc)


def _emit_text(doc, indent: str = ""):
    if isinstance(doc, dict):
        for key in doc:
            value = doc[key]
            if isinstance(value, (dict, list)):
                sys.stdout.write(f"{indent}{key}:\n")
                _emit_text(value, indent + "  ")
            else:
                sys.stdout.write(f"{indent}{key}: {value}\n")
    elif isinstance(doc, list):
        for value in doc:
            if isinstance(value, (dict, list)):
                _emit_text(value, indent + "  ")
                sys.stdout.write("\n" if not indent else "")
            else:
                sys.stdout.write(f"{indent}- {value}\n")
    else:
        sys.stdout.write(f"{indent}{doc}\n")


def cmd_jac(args) -> int:
    g = _read_graph(args.graph)
    js = jacobian.jacobian(g, args.base)
    _emit(js.to_json_dict(), args.format)
    return EXIT_OK


def cmd_order(args) -> int:
    g = _read_graph(args.graph)
    d = jacobian.delta(g, args.x, args.y)
    order = jacobian.order_of_class(g, d, args.base)
    index = jacobian.class_index(g, d, args.base)
    _emit({"x": args.x, "y": args.y, "order": str(order), "index": str(index)},
          args.format)
    return EXIT_OK


def cmd_gen(args) -> int:
    g = _read_graph(args.graph)
    generator = theorems.is_generator_delta(g, args.x, args.y)
    doc = {
        "x": args.x,
        "y": args.y,
        "is_generator": generator,
        "gcd_criterion_added_edge": theorems.generator_gcd_criterion(
            g, args.x, args.y, add=True
        ),
    }
    _emit(doc, args.format)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    report = theorems.divisibility_report(g, args.x, args.y, args.k)
    identity = theorems.deletion_identity(g, args.x, args.y, args.k)
    bounds = theorems.bound_report(g)
    doc = {
        "divisibility": report.to_json_dict(),
        "deletion_identity": identity.to_json_dict(),
        "bounds": bounds.to_json_dict(),
    }
    ok = report.asserted_laws_hold and identity.holds and bounds.all_hold
    if not ok:
        doc["witness_graph"] = g.to_edge_list()
    _emit(doc, args.format)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_contract(args) -> int:
    g = _read_graph(args.graph)
    recurrence = theorems.contraction_recurrence_check(g, args.x, args.y)
    generator = theorems.contraction_generator(g, args.x, args.y)
    doc = {
        "recurrence": recurrence.to_json_dict(),
        "generator": generator.to_json_dict(),
    }
    ok = recurrence.holds and (not generator.coprime or generator.generates)
    if not ok:
        doc["witness_graph"] = g.to_edge_list()
    _emit(doc, args.format)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_bounds(args) -> int:
    g = _read_graph(args.graph)
    report = theorems.bound_report(g)
    doc = report.to_json_dict()
    if not report.all_hold:
        doc["witness_graph"] = g.to_edge_list()
    _emit(doc, args.format)
    return EXIT_OK if report.all_hold else EXIT_CHECK_FAILED


def cmd_experiment(args) -> int:
    cfg = experiments.ExperimentConfig(
        mode=args.mode,
        n=args.n,
        p=Fraction(args.p),
        trials=args.trials,
        seed=args.seed,
        jobs=args.jobs,
    )
    result = experiments.run_experiment(cfg)
    fmt = args.format if args.format != "text" else "json"
    sys.stdout.write(experiments.emit_results(result, fmt))
    print(f"elapsed: {result.elapsed:.2f}s  resamples: {result.resamples}",
          file=sys.stderr)
    if cfg.mode == "order-conjecture" and result.counterexamples:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_scan_conjecture(args) -> int:
    t0 = time.perf_counter()
    checked, counterexamples = experiments.scan_order_conjecture_exhaustive(args.n)
    doc = {
        "n": args.n,
        "graphs_checked": checked,
        "counterexamples": counterexamples,
    }
    _emit(doc, args.format if args.format != "csv" else "json")
    print(f"elapsed: {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return EXIT_CHECK_FAILED if counterexamples else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critgroup",
        description="Exact critical-group computations on multigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_cmd(name, fn, help_text, xy=False, k=False, base=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="edge-list file, or '-' for stdin")
        if base:
            p.add_argument("--base", type=int, default=None,
                           help="reduction vertex (default: last)")
        if xy:
            p.add_argument("--x", type=int, required=True)
            p.add_argument("--y", type=int, required=True)
        if k:
            p.add_argument("--k", type=int, default=1,
                           help="edges to remove between x and y (negative adds)")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.set_defaults(fn=fn)
        return p

    add_graph_cmd("jac", cmd_jac, "critical-group order and invariant factors", base=True)
    add_graph_cmd("order", cmd_order, "order and index of the two-vertex class",
                  xy=True, base=True)
    add_graph_cmd("gen", cmd_gen, "does the two-vertex class generate?", xy=True)
    add_graph_cmd("check", cmd_check, "edge-surgery divisibility laws and identities",
                  xy=True, k=True)
    add_graph_cmd("contract", cmd_contract,
                  "deletion-contraction recurrence and contraction generator", xy=True)
    add_graph_cmd("bounds", cmd_bounds, "order lower bounds")

    p = sub.add_parser("experiment", help="seeded Monte Carlo experiments")
    p.add_argument("--mode", choices=experiments.MODES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", default="1/2", help="edge probability (rational, e.g. 1/2)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(fn=cmd_experiment)

    p = sub.add_parser("scan-conjecture",
                       help="exhaustive biconnected order-conjecture scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(fn=cmd_scan_conjecture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
