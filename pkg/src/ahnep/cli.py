"""Command-line interface.

Exit codes are a stable contract: 0/1/2 are verdicts (accepted/SAT,
rejected/UNSAT or disagreement, resource limit), 3 is a usage error and 4
an input/parse error.  Human-oriented text goes to stdout; machine output
(traces, transformed networks) goes to files.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .engine import InputWordError, NetworkValidationError, run
from .formats import (FORMAT_VERSION, ParseError, parse_network, parse_word,
                      serialize_network, serialize_trace)
from .model import HaltingMode, RunLimits, Verdict
from .sat import (DimacsError, brute_force_sat, build_sat_network,
                  parse_dimacs)
from .topology import (is_complete_with_loops, is_grid, is_ring, is_star,
                       max_degree)
from .transform import (TransformError, check_equivalence, enumerate_words,
                        prune_to_degree3, to_grid, to_star)

EXIT_USAGE = 3
EXIT_ERROR = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which collides with the
    # "resource limit" verdict; remap to 3.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_network(path: str):
    return parse_network(Path(path).read_text(encoding="utf-8"))


def _limits(args) -> RunLimits:
    return RunLimits(
        max_steps=args.max_steps,
        max_word_len=getattr(args, "max_word_len", 256),
        max_words_per_node=getattr(args, "max_words", 100_000),
        halting=HaltingMode(getattr(args, "halting", "paper")),
    )


def cmd_run(args) -> int:
    net = _load_network(args.network)
    w = parse_word(args.word)
    outcome, trace = run(net, w, limits=_limits(args),
                         want_trace=args.trace is not None,
                         threads=args.threads)
    if args.trace is not None:
        Path(args.trace).write_text(serialize_trace(trace, args.trace_format),
                                    encoding="utf-8")
    print(outcome)
    return {Verdict.ACCEPTED: 0, Verdict.REJECTED: 1,
            Verdict.LIMIT: 2}[outcome.verdict]


def cmd_transform(args) -> int:
    net = _load_network(args.network)
    builder = {"star": to_star, "grid": to_grid,
               "degree3": prune_to_degree3}[args.kind]
    Path(args.output).write_text(serialize_network(builder(net)),
                                 encoding="utf-8")
    return 0


def cmd_check_equiv(args) -> int:
    net_a = _load_network(args.network_a)
    net_b = _load_network(args.network_b)
    if args.words is not None:
        words = []
        for line in Path(args.words).read_text(encoding="utf-8").splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                words.append(parse_word(line))
    else:
        words = enumerate_words(net_a.input_alphabet, args.enumerate)
    report = check_equivalence(net_a, net_b, words,
                               limits=RunLimits(max_steps=args.max_steps),
                               threads=args.threads)
    print(report.render(), end="")
    return 0 if report.ok else 1


def cmd_topology(args) -> int:
    net = _load_network(args.network)
    g = net.graph
    families = []
    if is_star(g) is not None:
        families.append("star")
    if is_ring(g) is not None:
        families.append("ring")
    dims = is_grid(g)
    if dims is not None:
        families.append(f"grid {dims[0]}x{dims[1]}")
    if is_complete_with_loops(g):
        families.append("complete-with-loops")
    label = ", ".join(families) if families else "unrecognized family"
    print(f"{label}, {len(g.nodes)} nodes, max degree {max_degree(g)}")
    return 0


def cmd_sat(args) -> int:
    formula = parse_dimacs(Path(args.dimacs).read_text(encoding="utf-8"))
    net, w = build_sat_network(formula)
    if args.emit_network is not None:
        Path(args.emit_network).write_text(serialize_network(net),
                                           encoding="utf-8")
    outcome, _ = run(net, w, limits=RunLimits(max_steps=args.max_steps),
                     threads=args.threads)
    if outcome.verdict is Verdict.LIMIT:
        print(outcome)
        return 2
    answer = outcome.verdict is Verdict.ACCEPTED
    print("SAT" if answer else "UNSAT")
    if args.oracle:
        expected = brute_force_sat(formula)
        print(f"oracle: {'SAT' if expected else 'UNSAT'}")
        if expected != answer:
            print("MISMATCH between network and oracle", file=sys.stderr)
            return EXIT_ERROR
    return 0 if answer else 1


def _add_run_limit_flags(p, max_steps=10_000):
    p.add_argument("--max-steps", type=int, default=max_steps)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker threads for per-node evolution; results are "
                        "identical for any value")


def build_parser() -> _Parser:
    parser = _Parser(prog="ahnep",
                     description="Simulate, transform and test accepting "
                                 "hybrid networks of evolutionary processors.")
    parser.add_argument("--version", action="version",
                        version=f"ahnep {__version__} (format {FORMAT_VERSION})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a network on an input word")
    p.add_argument("network")
    p.add_argument("word", help="comma-separated symbols, '.' for the empty word")
    p.add_argument("--trace", metavar="FILE")
    p.add_argument("--trace-format", choices=("text", "jsonl"), default="text")
    _add_run_limit_flags(p)
    p.add_argument("--max-word-len", type=int, default=256)
    p.add_argument("--max-words", type=int, default=100_000)
    p.add_argument("--halting", choices=("paper", "cycle"), default="paper")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("transform", help="rebuild a network's topology")
    p.add_argument("kind", choices=("star", "grid", "degree3"))
    p.add_argument("network")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("check-equiv",
                       help="compare acceptance of two networks over a word set")
    p.add_argument("network_a")
    p.add_argument("network_b")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--words", metavar="FILE",
                       help="file with one word per line")
    group.add_argument("--enumerate", type=int, metavar="MAXLEN",
                       help="test all input-alphabet words up to this length")
    _add_run_limit_flags(p, max_steps=400)
    p.set_defaults(func=cmd_check_equiv)

    p = sub.add_parser("topology", help="report graph family and degree")
    p.add_argument("action", choices=("check",))
    p.add_argument("network")
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("sat", help="decide a DIMACS 3CNF instance")
    p.add_argument("action", choices=("solve",))
    p.add_argument("dimacs")
    p.add_argument("--oracle", action="store_true",
                   help="also check against the brute-force oracle")
    p.add_argument("--emit-network", metavar="FILE")
    _add_run_limit_flags(p)
    p.set_defaults(func=cmd_sat)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DimacsError, TransformError, NetworkValidationError,
            InputWordError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
