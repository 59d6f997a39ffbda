"""Command line entry points.

Subcommands: enumerate, verify, color, stats.  Exit codes: 0 clean,
1 a checked bound was violated, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterator, Optional, TextIO

from .brooks import BrooksExceptionError, brooks_color
from .canon import corpus_3k1_free, enumerate_triangle_free
from .chromatic import chromatic_number, greedy_dsatur
from .graph import Graph, Graph6Error, GraphError, from_graph6, to_graph6
from .harness import Summary, verify_graph
from .kempe import SearchConfig, color_3k1_free

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse already exits 2; keep messages on stderr
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph6_file(path: str) -> Iterator[tuple[str, Graph]]:
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield line, from_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc


def _open_out(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="ascii")


def cmd_enumerate(args: argparse.Namespace) -> int:
    out = _open_out(args.out)
    try:
        if args.triangle_free:
            for g in enumerate_triangle_free(args.n):
                out.write(to_graph6(g) + "\n")
        else:
            for gid, _ in corpus_3k1_free(args.n, args.min_delta):
                out.write(gid + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = SearchConfig(depth=args.budget)
    if args.infile is not None:
        graphs: Iterator[tuple[Optional[str], Graph]] = (
            (None, g) for _, g in _read_graph6_file(args.infile)
        )
    else:
        graphs = iter(corpus_3k1_free(args.n, args.min_delta))
    summary = Summary()
    out = _open_out(args.report)
    try:
        for gid, g in graphs:
            rec = verify_graph(g, config, gid)
            out.write(rec.to_json() + "\n")
            summary.add(rec)
    finally:
        if out is not sys.stdout:
            out.close()
    sys.stderr.write(
        f"graphs={summary.total} violations={len(summary.violations)} "
        f"engine(rule={summary.engine_totals['rule']} search={summary.engine_totals['search']} "
        f"fallback={summary.engine_totals['fallback']})\n"
    )
    for gid, which in summary.violations:
        sys.stderr.write(f"VIOLATION {which}: {gid}\n")
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def _color_one(g: Graph, method: str, config: SearchConfig) -> tuple[int, tuple[int, ...], str]:
    if method == "exact":
        chi, coloring = chromatic_number(g)
        return chi, coloring.colors, ""
    if method == "dsatur":
        coloring = greedy_dsatur(g)
        return coloring.k, coloring.colors, ""
    if method == "brooks":
        coloring = brooks_color(g)
        return coloring.k, coloring.colors, ""
    coloring, telemetry = color_3k1_free(g, config)
    note = "" if telemetry.bound_applies else " (no strengthened bound applies)"
    return coloring.colors_used(), coloring.colors, note


def cmd_color(args: argparse.Namespace) -> int:
    config = SearchConfig(depth=args.budget)
    if args.graph6 is not None:
        inputs: Iterator[tuple[str, Graph]] = iter([(args.graph6, from_graph6(args.graph6))])
    else:
        inputs = _read_graph6_file(args.infile)
    for label, g in inputs:
        try:
            used, colors, note = _color_one(g, args.method, config)
        except (BrooksExceptionError, GraphError) as exc:
            raise GraphError(f"{label}: {exc}") from exc
        print(f"{label} colors={used}{note}: {' '.join(map(str, colors))}")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    from .harness import VerificationRecord, report

    with open(args.report, "r", encoding="ascii") as fh:
        records = [VerificationRecord.from_json(line) for line in fh if line.strip()]
    sys.stdout.write(report(records, fmt=args.format))
    return EXIT_VIOLATION if any(r.violations() for r in records) else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="colorbound", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="emit a graph6 corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-delta", type=int, default=0)
    p.add_argument("--triangle-free", action="store_true", help="emit the triangle-free side instead of its complements")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="verify all bounds over a corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int)
    src.add_argument("--in", dest="infile")
    p.add_argument("--min-delta", type=int, default=0)
    p.add_argument("--report", default=None, help="JSON-lines record output (default stdout)")
    p.add_argument("--budget", type=int, default=SearchConfig().depth, help="move-search depth")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("color", help="color one or more graphs")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6")
    src.add_argument("--in", dest="infile")
    p.add_argument("--method", choices=("exact", "brooks", "dsatur", "extend"), required=True)
    p.add_argument("--budget", type=int, default=SearchConfig().depth)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("stats", help="summarize a JSON-lines record file")
    p.add_argument("--report", required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, GraphError, OSError) as exc:
        sys.stderr.write(f"colorbound: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
