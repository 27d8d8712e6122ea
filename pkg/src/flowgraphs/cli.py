"""``flowgraphs`` command line: transform, validate, bench.

Exit codes: 0 success, 1 bad input program or failed assertions, 2 I/O
problems, malformed assertion files and usage errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import __version__
from .errors import FlowgraphsError
from .generator import PROFILES
from .pipeline import PipelineOptions, Timings, run_source
from .serialize import ModelFormatError, deserialize_xml
from .validator import MalformedAssertion, check, parse_assertions

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _error(message: str) -> None:
    print(f"flowgraphs: {message}", file=sys.stderr)


def _sizes(text: str) -> List[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}") from None
    if not sizes or any(s < 0 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be non-negative integers")
    return sizes


def cmd_transform(args) -> int:
    options = PipelineOptions(control_flow=not args.no_controlflow, data_flow=not args.no_dataflow,
                              strategy=args.dataflow)
    timings = Timings()
    try:
        with timings.phase("read_input"):
            text = _read(args.input)
        _, rendered = run_source(text, options, fmt=args.format, edges=args.edges,
                                 ast_json=args.ast_json, timings=timings)
        with timings.phase("write_output"):
            _write(args.output, rendered)
    except OSError as exc:
        _error(str(exc))
        return EXIT_USAGE
    except FlowgraphsError as exc:
        _error(f"{args.input}: {exc}")
        return EXIT_FAIL
    if args.stats is not None:
        if args.stats == "-":
            sys.stderr.write(timings.csv())
        else:
            try:
                _write(args.stats, timings.csv())
            except OSError as exc:
                _error(str(exc))
                return EXIT_USAGE
    return EXIT_OK


def _select_graph(graphs, method: Optional[str]):
    if method is None:
        if len(graphs) != 1:
            names = ", ".join(g.qualified_name for g in graphs) or "none"
            raise LookupError(f"model holds {len(graphs)} graphs ({names}); pick one with --method")
        return graphs[0]
    hits = [g for g in graphs if method in (g.name, g.qualified_name)]
    if len(hits) != 1:
        raise LookupError(f"--method {method!r} matches {len(hits)} graphs")
    return hits[0]


def cmd_validate(args) -> int:
    try:
        graphs = deserialize_xml(_read(args.model))
        assertions = parse_assertions(_read(args.assertions))
        graph = _select_graph(graphs, args.method)
    except (OSError, MalformedAssertion, ModelFormatError, LookupError) as exc:
        _error(str(exc).strip("'\""))
        return EXIT_USAGE
    report = check(graph, assertions)
    sys.stdout.write(report.render())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_bench(args) -> int:
    from .bench import mismatches, run_bench, to_csv

    profiles = list(PROFILES) if args.profile == "all" else [args.profile]
    strategies = ["traversal", "fixpoint"] if args.dataflow == "both" else [args.dataflow]
    rows = run_bench(args.sizes, profiles, strategies, args.repeat)
    try:
        _write(args.output, to_csv(rows))
        if args.plot:
            from .plotting import plot_phases

            plot_phases(rows, args.plot)
    except OSError as exc:
        _error(str(exc))
        return EXIT_USAGE
    except ValueError as exc:
        _error(f"--plot: {exc}")
        return EXIT_USAGE
    bad = mismatches(rows)
    for profile, size in bad:
        _error(f"traversal and fixpoint disagree on {profile} size {size}")
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flowgraphs",
                                     description="Flow graphs (control and data flow) for a Java subset.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", help="build flow graphs for every method of a source file")
    t.add_argument("input", help="Java-subset source, or JSON AST with --ast-json ('-' for stdin)")
    t.add_argument("-o", "--output", help="output file (default: stdout)")
    t.add_argument("--format", choices=("xml", "dot"), default="xml")
    t.add_argument("--edges", choices=("cf", "df", "both"), default="both", help="edges drawn in DOT output")
    t.add_argument("--no-controlflow", action="store_true", help="stop after the structure graph")
    t.add_argument("--no-dataflow", action="store_true", help="skip def-use edges")
    t.add_argument("--dataflow", choices=("traversal", "fixpoint"), default="traversal",
                   help="def-use algorithm (default: traversal)")
    t.add_argument("--stats", nargs="?", const="-", metavar="PATH",
                   help="write per-phase timings as CSV (default: stderr)")
    t.add_argument("--ast-json", action="store_true", help="input is a JSON AST document")
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("validate", help="check cfNext/cfPrev/dfNext assertions against an XML model")
    v.add_argument("model", help="XML model written by 'transform'")
    v.add_argument("assertions", help="assertion file")
    v.add_argument("--method", help="graph to check (name or Class.name); needed for multi-method models")
    v.set_defaults(func=cmd_validate)

    b = sub.add_parser("bench", help="time the pipeline on synthetic methods")
    b.add_argument("--sizes", type=_sizes, default=[0, 10, 100, 1000], help="comma-separated statement counts")
    b.add_argument("--profile", choices=(*PROFILES, "all"), default="straight")
    b.add_argument("--repeat", type=int, default=3, help="runs per cell; the median is reported")
    b.add_argument("--dataflow", choices=("traversal", "fixpoint", "both"), default="traversal")
    b.add_argument("-o", "--output", help="CSV file (default: stdout)")
    b.add_argument("--plot", metavar="PNG", help="also save a log-log figure of the phase medians")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "transform" and args.no_controlflow and not args.no_dataflow:
        parser.error("--no-controlflow needs --no-dataflow: data flow is derived from control flow")
    if args.command == "bench" and args.repeat < 1:
        parser.error("--repeat must be at least 1")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
