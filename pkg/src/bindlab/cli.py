"""Command-line entry point.

Exit codes: 0 computed / property holds, 1 property fails, 2 a campaign
found a counterexample, 3 input or usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Sequence

from bindlab import generators
from bindlab.binding import BindingError, binding_number, binding_number_pruned
from bindlab.factors import (
    CapacityError,
    DEFAULT_FREE_EDGE_CAP,
    FactorBounds,
    covered_oracle,
    fractional_factor_exists,
    is_fractional_ab_covered,
)
from bindlab.graph import Graph, GraphError
from bindlab.graph6 import EdgeListError, Graph6Error, emit_graph6, parse_graph_text, read_graph6_file
from bindlab.idcritical import id_critical_profile, is_id_critical_covered
from bindlab.report import emit_report, rational
from bindlab.theorem import DEFAULT_SLACK, DomainError, default_jobs, gnp_descriptor, run_campaign

EXIT_OK, EXIT_FAILS, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _load_graph(arg: str) -> Graph:
    if arg == "-":
        return parse_graph_text(sys.stdin.read())
    if os.path.exists(arg):
        with open(arg, encoding="ascii") as fh:
            return parse_graph_text(fh.read())
    return parse_graph_text(arg)


def _bounds(args) -> FactorBounds:
    try:
        return FactorBounds(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_gnp_spec(spec: str) -> tuple[list[int], list[Fraction], int]:
    """``NMIN-NMAX:P1,P2,...:COUNT`` (a single ``N`` is also accepted)."""
    try:
        sizes_part, probs_part, count_part = spec.split(":")
        if "-" in sizes_part:
            lo, hi = (int(x) for x in sizes_part.split("-"))
        else:
            lo = hi = int(sizes_part)
        probs = [Fraction(p) for p in probs_part.split(",")]
        count = int(count_part)
    except ValueError:
        raise UsageError(f"bad --gnp spec {spec!r}; expected NMIN-NMAX:P1,P2:COUNT") from None
    return list(range(lo, hi + 1)), probs, count


def _campaign_corpus(args) -> tuple[list[Graph], dict]:
    if (args.corpus is None) == (args.gnp is None):
        raise UsageError("give exactly one of a corpus file or --gnp")
    if args.corpus is not None:
        return read_graph6_file(args.corpus), {"generator": "file", "path": os.path.basename(args.corpus)}
    if args.seed is None:
        raise UsageError("--gnp needs --seed")
    sizes, probs, count = _parse_gnp_spec(args.gnp)
    seeds = range(args.seed, args.seed + count)
    return list(generators.gnp_corpus(sizes, probs, seeds)), gnp_descriptor(sizes, probs, seeds)


def cmd_bind(args) -> int:
    G = _load_graph(args.graph)
    bw = binding_number_pruned(G) if args.pruned else binding_number(G)
    print(f"bind {rational(bw.value)}")
    print(f"witness {bw.witness_set}")
    return EXIT_OK


def cmd_covered(args) -> int:
    G = _load_graph(args.graph)
    bd = _bounds(args)
    if args.oracle:
        verdict = covered_oracle(G, bd, cap=args.cap)
        print(f"covered {str(verdict.covered).lower()}")
        if verdict.failing_edge is not None:
            print("failing_edge {} {}".format(*verdict.failing_edge))
        return EXIT_OK if verdict.covered else EXIT_FAILS
    verdict = is_fractional_ab_covered(G, bd)
    print(f"covered {str(verdict.covered).lower()}")
    if verdict.witness is not None:
        w = verdict.witness
        print(f"witness S={w.S} T={w.T} epsilon={w.epsilon} delta={w.delta}")
    return EXIT_OK if verdict.covered else EXIT_FAILS


def cmd_factor(args) -> int:
    G = _load_graph(args.graph)
    bd = _bounds(args)
    forced = [tuple(e) for e in args.force_edge or []]
    h = fractional_factor_exists(G, bd, forced, cap=args.cap)
    print(f"exists {str(h is not None).lower()}")
    if h is None:
        return EXIT_FAILS
    for (u, v), w in zip(G.edges, h.weights):
        print(f"{u} {v} {rational(w)}")
    return EXIT_OK


def cmd_idcc(args) -> int:
    G = _load_graph(args.graph)
    bd = _bounds(args)
    if args.profile:
        for size, prof in id_critical_profile(G, bd).items():
            print(f"|I|={size} pass={prof.passed} fail={prof.failed}")
    verdict = is_id_critical_covered(G, bd, include_empty=args.include_empty_I)
    print(f"idcc {str(verdict.holds).lower()}")
    if not verdict.holds:
        w = verdict.inner.witness
        print(f"failing_set {verdict.failing_set}")
        print(f"witness S={w.S} T={w.T} epsilon={w.epsilon} delta={w.delta}")
    return EXIT_OK if verdict.holds else EXIT_FAILS


def _campaign(args, mode: str) -> int:
    bd = _bounds(args)
    corpus, descriptor = _campaign_corpus(args)
    report = run_campaign(
        corpus,
        bd,
        mode,
        args.slack,
        always_check=args.always_check,
        include_empty=args.include_empty_I,
        threshold_scale=args.threshold_scale,
        descriptor=descriptor,
        jobs=args.jobs,
    )
    if args.output:
        emit_report(report, args.format, args.output)
        sys.stdout.write(emit_report(report, "text"))
    else:
        sys.stdout.write(emit_report(report, args.format))
    if args.dump_counterexamples and report.counterexamples:
        with open(args.dump_counterexamples, "w", encoding="ascii") as fh:
            for row in report.counterexamples:
                fh.write(row.graph6 + "\n")
    if report.counterexamples:
        print(f"COUNTEREXAMPLES FOUND: {len(report.counterexamples)}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_gen(args) -> int:
    fam, params = args.family, args.params
    try:
        if fam == "gnp":
            if len(params) != 2 or args.seed is None:
                raise UsageError("gnp needs N P and --seed")
            n, p = int(params[0]), Fraction(params[1])
            graphs = [generators.random_gnp(n, p, args.seed + i) for i in range(args.count)]
        else:
            ints = [int(x) for x in params]
            builders = {
                "complete": generators.complete,
                "empty": generators.empty,
                "cycle": generators.cycle,
                "path": generators.path,
                "star": generators.star,
                "wheel": generators.wheel,
                "bipartite": generators.complete_bipartite,
                "split": generators.complete_split,
                "multipartite": generators.complete_multipartite,
            }
            if fam not in builders:
                raise UsageError(f"unknown family {fam!r}")
            graphs = [builders[fam](*ints)]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad parameters for {fam}: {exc}") from None
    for G in graphs:
        print(emit_graph6(G))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bindlab", description="Binding numbers and fractional ID-[a,b]-factor-critical covered graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name: str, help: str, bounds: bool = True):
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", help="graph6 string, graph6/edge-list file, or - for stdin")
        if bounds:
            p.add_argument("-a", type=int, required=True)
            p.add_argument("-b", type=int, required=True)
        return p

    p = graph_cmd("bind", "binding number and a minimising set", bounds=False)
    p.add_argument("--pruned", action="store_true", help="use the branch-and-bound route")
    p.set_defaults(func=cmd_bind)

    p = graph_cmd("covered", "fractional [a,b]-covered verdict")
    p.add_argument("--oracle", action="store_true", help="decide with the half-integral grid search")
    p.add_argument("--cap", type=int, default=DEFAULT_FREE_EDGE_CAP)
    p.set_defaults(func=cmd_covered)

    p = graph_cmd("factor", "fractional [a,b]-factor with optional forced edges")
    p.add_argument("--force-edge", nargs=2, type=int, action="append", metavar=("U", "V"))
    p.add_argument("--cap", type=int, default=DEFAULT_FREE_EDGE_CAP)
    p.set_defaults(func=cmd_factor)

    p = graph_cmd("idcc", "fractional ID-[a,b]-factor-critical covered verdict")
    p.add_argument("--include-empty-I", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--profile", action="store_true", help="also print pass/fail counts by |I|")
    p.set_defaults(func=cmd_idcc)

    for name, mode in (("verify-theorem2", "theorem2"), ("scan-conjecture1", "conjecture1")):
        p = sub.add_parser(name, help=f"{mode} campaign over a corpus")
        p.add_argument("corpus", nargs="?", help="graph6 file, one graph per line")
        p.add_argument("--gnp", help="random corpus NMIN-NMAX:P1,P2:COUNT (seeds from --seed)")
        p.add_argument("--seed", type=int)
        p.add_argument("-a", type=int, required=True)
        p.add_argument("-b", type=int, required=True)
        p.add_argument("--slack", type=_fraction, default=DEFAULT_SLACK)
        p.add_argument("--always-check", action="store_true")
        p.add_argument("--include-empty-I", action=argparse.BooleanOptionalAction, default=True)
        p.add_argument("--threshold-scale", type=_fraction, default=Fraction(1),
                       help="multiply the binding threshold (detector testing)")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--output")
        p.add_argument("--dump-counterexamples", metavar="PATH")
        p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $BINDLAB_JOBS or 1)")
        p.set_defaults(func=lambda args, mode=mode: _campaign(args, mode))

    p = sub.add_parser("gen", help="emit graph6 for a graph family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 0) is None:
            args.jobs = default_jobs()
        return args.func(args)
    except (UsageError, Graph6Error, EdgeListError, GraphError, BindingError, DomainError, CapacityError, OSError) as exc:
        print(f"bindlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"bindlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
