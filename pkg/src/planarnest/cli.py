"""Command-line entry point.

Exit status: 0 on success, 1 when the input graph (or matrix) is invalid or a
verification check fails, 2 on usage errors such as unreadable files.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import export, generators, oracle
from .bubbles import decompose
from .graph import GraphError, PlanarGraph, format_edge_list, parse_edge_list
from .hierarchy import TieBreakPolicy, build_forest
from .pmfg import build_pmfg, parse_weight_csv

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

_ALLOWED_FORMATS = {
    "analyze": ("text", "json"),
    "hierarchy": ("json", "dot"),
    "bubbles": ("json", "dot"),
    "pmfg": ("edgelist",),
    "generate": ("edgelist",),
    "verify": ("json",),
}


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _policy(name: str) -> TieBreakPolicy:
    return TieBreakPolicy(name)


def _cmd_analyze(args) -> tuple[str, int]:
    tree = decompose(parse_edge_list(_read(args.file)), _policy(args.tie_break))
    info = export.summary(tree)
    if args.format == "json":
        return json.dumps(info, indent=2) + "\n", EXIT_OK
    return "".join(f"{k}: {v}\n" for k, v in info.items()), EXIT_OK


def _cmd_hierarchy(args) -> tuple[str, int]:
    h = build_forest(parse_edge_list(_read(args.file)), policy=_policy(args.tie_break))
    if args.format == "dot":
        return export.hierarchy_dot(h), EXIT_OK
    return export.hierarchy_json(h) + "\n", EXIT_OK


def _cmd_bubbles(args) -> tuple[str, int]:
    tree = decompose(parse_edge_list(_read(args.file)), _policy(args.tie_break))
    if args.format == "dot":
        return export.bubbles_dot(tree), EXIT_OK
    return export.bubbles_json(tree) + "\n", EXIT_OK


def _cmd_pmfg(args) -> tuple[str, int]:
    return format_edge_list(build_pmfg(parse_weight_csv(_read(args.file)))), EXIT_OK


def _cmd_generate(args) -> tuple[str, int]:
    kind = args.kind
    if kind == "apollonian":
        g = generators.apollonian(args.gen)
    elif kind == "two-bubble":
        g = generators.two_bubble_example()
    elif kind == "equal-split":
        g = generators.equal_split_example()
    elif kind == "random":
        if args.n is None:
            raise UsageError("generate random requires --n")
        g = generators.random_triangulation(args.n, args.seed)
    else:
        if args.name is None:
            raise UsageError("generate named requires --name")
        g = generators.named_graph(args.name)
    return format_edge_list(g), EXIT_OK


def _cmd_verify(args) -> tuple[str, int]:
    g: PlanarGraph = parse_edge_list(_read(args.file))
    reports = oracle.run_all(g, _policy(args.tie_break))
    status = EXIT_OK if all(r.ok for r in reports) else EXIT_INVALID
    return "".join(r.to_json() + "\n" for r in reports), status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a flag given before the subcommand from being reset by it
    common.add_argument(
        "--format", choices=("text", "json", "dot", "edgelist"), default=argparse.SUPPRESS
    )
    common.add_argument("--tie-break", choices=("min", "max"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write to a file")

    parser = argparse.ArgumentParser(
        prog="planarnest",
        description="Clique hierarchy and bubble tree of maximal planar graphs.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("analyze", "print a summary of the decomposition"),
        ("hierarchy", "emit the 3-clique forest"),
        ("bubbles", "emit the bubbles and their tree"),
        ("verify", "run the brute-force structural checks"),
    ]:
        p = sub.add_parser(name, help=helptext, parents=[common])
        p.add_argument("file", help="edge-list file, '-' for stdin")
    p = sub.add_parser("pmfg", help="filter a weight matrix CSV to a PMFG", parents=[common])
    p.add_argument("file", help="CSV file, '-' for stdin")

    p = sub.add_parser("generate", help="write a generated graph", parents=[common])
    p.add_argument(
        "kind", choices=("apollonian", "two-bubble", "equal-split", "random", "named")
    )
    p.add_argument("--gen", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--name")
    return parser


_COMMANDS = {
    "analyze": _cmd_analyze,
    "hierarchy": _cmd_hierarchy,
    "bubbles": _cmd_bubbles,
    "pmfg": _cmd_pmfg,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.tie_break = getattr(args, "tie_break", "min")
    args.out = getattr(args, "out", None)
    args.format = getattr(args, "format", None)
    allowed = _ALLOWED_FORMATS[args.command]
    if args.format is None:
        args.format = allowed[0]
    elif args.format not in allowed:
        parser.error(f"--format {args.format} not supported by {args.command}")

    try:
        text, status = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"planarnest: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, ValueError) as exc:
        print(f"planarnest: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"planarnest: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
