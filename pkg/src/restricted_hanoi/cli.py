"""Command-line interface.

Exit codes: 0 success, 1 usage or validation error, 2 unsolvable task or
count mismatch, 3 state space too large.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import shortest_path
from .builder import BUILDERS, build_by_neighbors
from .combinatorics import closed_form_report, enumerated_report
from .degrees import degree_profile, outdegree_formula
from .digraph import parse_digraph_spec
from .errors import CapacityError, HanoiError
from .export import ExportFormat, render
from .states import encode, parse_state
from .verify import sweep

EXIT_USAGE = 1
EXIT_UNSOLVABLE = 2
EXIT_CAPACITY = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_problem(p: argparse.ArgumentParser) -> None:
    p.add_argument("--discs", type=int, required=True, metavar="N")
    p.add_argument("--pegs", type=int, required=True, metavar="M")
    p.add_argument(
        "--digraph", required=True, metavar="SPEC", help="complete, path, cycle, star or file:PATH"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rhanoi", description="Restricted Tower of Hanoi state graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="build the state graph and export it")
    _add_problem(gen)
    gen.add_argument("--builder", choices=sorted(BUILDERS), default="fast")
    gen.add_argument("--format", choices=[f.value for f in ExportFormat], required=True)
    gen.add_argument("--out", metavar="PATH")

    count = sub.add_parser("count", help="closed-form arc counts per disc")
    _add_problem(count)
    count.add_argument("--verify", action="store_true", help="compare against enumeration")
    count.add_argument("--json", action="store_true")

    degree = sub.add_parser("degree", help="outdegree of one state, or the degree histogram")
    _add_problem(degree)
    degree.add_argument("--state", metavar="S")

    solve = sub.add_parser("solve", help="shortest move sequence between two states")
    _add_problem(solve)
    solve.add_argument("--from", dest="start", required=True, metavar="S")
    solve.add_argument("--to", dest="end", required=True, metavar="S")

    check = sub.add_parser("check", help="verify every identity over a range of sizes")
    check.add_argument("--max-discs", type=int, required=True, metavar="N")
    check.add_argument("--max-pegs", type=int, required=True, metavar="M")
    check.add_argument("--random", type=int, default=20, help="random digraphs per peg count")
    check.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_gen(args, d, out) -> int:
    g = BUILDERS[args.builder](args.discs, args.pegs, d)
    text = render(g, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(text.encode("utf-8"))
    else:
        out.write(text)
    return 0


def _cmd_count(args, d, out) -> int:
    report = closed_form_report(args.discs, args.pegs, d)
    status = 0
    if args.json:
        payload = report.to_json()
    else:
        for k, t in enumerate(report.per_disc, 1):
            out.write(f"t_{k} {t}\n")
        out.write(f"total {report.total}\n")
    if args.verify:
        enumerated = enumerated_report(build_by_neighbors(args.discs, args.pegs, d))
        match = enumerated.per_disc == report.per_disc and enumerated.total == report.total
        status = 0 if match else EXIT_UNSOLVABLE
        if args.json:
            payload = {"closed_form": payload, "enumerated": enumerated.to_json(), "match": match}
        else:
            out.write("verify ok\n" if match else f"verify MISMATCH: enumerated {list(enumerated.per_disc)}\n")
    if args.json:
        out.write(json.dumps(payload) + "\n")
    return status


def _cmd_degree(args, d, out) -> int:
    if args.state is not None:
        u = parse_state(args.state, args.discs, args.pegs)
        out.write(f"{outdegree_formula(u, d)}\n")
    else:
        out.write(json.dumps(degree_profile(args.discs, args.pegs, d).to_json()) + "\n")
    return 0


def _cmd_solve(args, d, out) -> int:
    start = encode(parse_state(args.start, args.discs, args.pegs))
    end = encode(parse_state(args.end, args.discs, args.pegs))
    g = build_by_neighbors(args.discs, args.pegs, d)
    path = shortest_path(g, start, end)
    if path is None:
        print(f"no move sequence leads from {args.start} to {args.end}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    out.write(json.dumps(path.to_json()) + "\n")
    return 0


def _cmd_check(args, out) -> int:
    if args.max_pegs < 3 or args.max_discs < 0:
        raise HanoiError("need --max-pegs >= 3 and --max-discs >= 0")
    results = sweep(args.max_discs, args.max_pegs, args.random, args.seed)
    bad = [r for r in results if not r.ok]
    for r in bad:
        for msg in r.failures:
            out.write(f"FAIL n={r.n} m={r.m} D={r.digraph}: {msg}\n")
    out.write(f"{len(results) - len(bad)}/{len(results)} cases passed\n")
    return 0 if not bad else EXIT_UNSOLVABLE


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args, out)
        d = parse_digraph_spec(args.digraph, args.pegs)
        handler = {"gen": _cmd_gen, "count": _cmd_count, "degree": _cmd_degree, "solve": _cmd_solve}
        return handler[args.command](args, d, out)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except HanoiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
