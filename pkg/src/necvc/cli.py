"""Command line entry point: ``necvc {solve,verify,gen,bench,scaling}``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bench
from .evaluation import verify_cover
from .graph_core import complement, format_cover, parse_cover, read_dimacs, to_dimacs


def _add_complement(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--complement",
        dest="complement",
        action="store_true",
        default=None,
        help="solve on the complement graph (default for DIMACS files)",
    )
    p.add_argument("--no-complement", dest="complement", action="store_false")


def cmd_solve(args) -> int:
    opts = bench.RunOptions(complement=args.complement, seed=args.seed, budget=args.budget)
    rec = bench.run_instance(args.instance, args.algo, opts)
    print(f"instance: {rec.instance} (n={rec.n}, m={rec.m})")
    print(f"algorithm: {rec.algorithm}")
    print(f"cover_size: {rec.cover_size}")
    if rec.ratio is not None:
        print(f"optimal: {rec.optimal}")
        print(f"ratio: {rec.ratio:.4f}")
    print(f"time_ms: {rec.time_ms:.3f}")
    print(f"iterations: {rec.iterations}")
    if not rec.valid:
        print("INVALID cover", file=sys.stderr)
        return 1
    if args.print_cover:
        sys.stdout.write(format_cover(rec.cover))
    return 0


def cmd_verify(args) -> int:
    g = read_dimacs(args.graph)
    if args.complement is not False:
        g = complement(g)
    cover = parse_cover(Path(args.cover).read_text(), n=g.n)
    report = verify_cover(g, cover)
    if report.valid:
        print(f"valid cover of size {cover.size}")
        return 0
    print(f"invalid: {len(report.uncovered)} uncovered edge(s)")
    for u, v in report.uncovered:
        print(f"e {u + 1} {v + 1}")
    return 1


def cmd_gen(args) -> int:
    _, g, _ = bench.parse_gen_spec(args.spec)
    sys.stdout.write(to_dimacs(g))
    return 0


def cmd_bench(args) -> int:
    specs = bench.read_manifest(args.manifest)
    opts = bench.RunOptions(complement=args.complement, seed=args.seed, budget=args.budget)
    records = bench.run_suite(
        specs, args.algos.split(","), args.reps, opts, parallel=args.parallel
    )
    sys.stdout.write(bench.emit_report(records, args.format))
    Path(args.results).write_text(bench.emit_report(records, "csv"))
    bad = [r for r in records if not r.valid]
    for r in bad:
        print(f"FAILED {r.instance}/{r.algorithm}: {r.error or 'invalid cover'}", file=sys.stderr)
    return 1 if bad else 0


def cmd_scaling(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    ladder = bench.scaling_ladder(sizes, args.algo, args.family, args.reps)
    for r in ladder:
        print(f"n={r.n:6d}  cover={r.cover_size:6d}  time_ms={r.time_ms:.3f}")
    if len(ladder) >= 4:
        print(f"slope: {bench.fit_scaling(ladder):.3f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="necvc", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance")
    p.add_argument("instance", help="DIMACS file or gen:<spec>")
    p.add_argument("--algo", default="nec", choices=sorted(bench.ALGORITHMS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=1_000_000, help="exact search node limit")
    p.add_argument("--print-cover", action="store_true", help="dump 1-indexed vertex ids")
    _add_complement(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a cover file against a graph")
    p.add_argument("graph")
    p.add_argument("cover")
    _add_complement(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated graph as DIMACS")
    p.add_argument("spec", help="complete:k | bipartite:m:n | gnm:n:m:seed | gnp:n:p:seed")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a manifest of instances")
    p.add_argument("manifest")
    p.add_argument("--algos", default="nec", help="comma-separated algorithm ids")
    p.add_argument("--format", default="csv", choices=["csv", "markdown"])
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--results", default="necvc_results.csv", help="CSV file for the records")
    _add_complement(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("scaling", help="time a graph-family ladder and fit the slope")
    p.add_argument("--family", default="complete", choices=["complete"])
    p.add_argument("--sizes", default="100,200,300,400,500,600,700,800")
    p.add_argument("--algo", default="nec", choices=sorted(bench.ALGORITHMS))
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=cmd_scaling)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"necvc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
