"""Benchmark harness: resolve instances, time solvers, report tables.

Instance specs are either a path to a DIMACS file or a generator spec::

    gen:complete:<k>
    gen:bipartite:<m>:<n>
    gen:gnm:<n>:<m>:<seed>
    gen:gnp:<n>:<p>:<seed>

DIMACS files are complemented on load by default, since the clique
benchmark optima are stated for the complement graph.
"""

from __future__ import annotations

import csv
import io
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from . import baselines, nec_solver
from .evaluation import selection_ratio, verify_cover
from .graph_core import (
    Cover,
    Graph,
    complement,
    gen_bipartite,
    gen_complete,
    gen_random_gnm,
    gen_random_gnp,
    read_dimacs,
)
from .registry import Registry, load_registry

__all__ = [
    "ALGORITHMS",
    "RunOptions",
    "Instance",
    "BenchmarkRecord",
    "parse_gen_spec",
    "load_instance",
    "run_instance",
    "run_suite",
    "read_manifest",
    "emit_report",
    "fit_scaling",
    "scaling_ladder",
    "CSV_COLUMNS",
]

log = logging.getLogger(__name__)

CSV_COLUMNS = [
    "instance",
    "algorithm",
    "n",
    "m",
    "cover_size",
    "optimal",
    "ratio",
    "time_ms",
    "iterations",
    "seed",
    "valid",
]


def _nec(g: Graph, opts: "RunOptions") -> tuple[Cover, int]:
    cover, stats = nec_solver.nec_cover(g)
    return cover, stats.iterations


def _greedy(g: Graph, opts: "RunOptions") -> tuple[Cover, int]:
    cover = baselines.greedy_degree(g)
    return cover, cover.size


def _match2(g: Graph, opts: "RunOptions") -> tuple[Cover, int]:
    cover = baselines.matching_2approx(g, opts.seed)
    return cover, cover.size // 2


def _exact(g: Graph, opts: "RunOptions") -> tuple[Cover, int]:
    cover = baselines.exact_mvc(g, opts.budget)
    return cover, cover.size


ALGORITHMS: dict[str, Callable[[Graph, "RunOptions"], tuple[Cover, int]]] = {
    "nec": _nec,
    "greedy": _greedy,
    "match2": _match2,
    "exact": _exact,
}
SEEDED = {"match2"}


@dataclass(frozen=True)
class RunOptions:
    complement: bool | None = None  # None: complement files, keep generated graphs
    seed: int = 0
    budget: int | None = 1_000_000
    oracle: bool = False  # fill the optimum with exact_mvc when unknown
    registry_path: str | None = None


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph
    optimum: int | None


@dataclass
class BenchmarkRecord:
    instance: str
    algorithm: str
    n: int | None = None
    m: int | None = None
    cover_size: int | None = None
    optimal: int | None = None
    ratio: float | None = None
    elapsed_ns: int | None = None
    iterations: int | None = None
    seed: int | None = None
    valid: bool = False
    error: str | None = None
    cover: tuple[int, ...] = field(default=(), repr=False)

    @property
    def time_ms(self) -> float | None:
        return None if self.elapsed_ns is None else self.elapsed_ns / 1e6

    @property
    def time_us(self) -> float | None:
        return None if self.elapsed_ns is None else self.elapsed_ns / 1e3


def parse_gen_spec(spec: str) -> tuple[str, Graph, int | None]:
    """Build a generated graph from ``[gen:]family:args``.

    Returns a display name, the graph and its optimum when the family has a
    closed form (complete and complete bipartite graphs).
    """
    body = spec[4:] if spec.startswith("gen:") else spec
    family, *args = body.split(":")
    try:
        if family == "complete" and len(args) == 1:
            k = int(args[0])
            return f"complete:{k}", gen_complete(k), k - 1
        if family == "bipartite" and len(args) == 2:
            a, b = int(args[0]), int(args[1])
            return f"bipartite:{a}:{b}", gen_bipartite(a, b), min(a, b)
        if family == "gnm" and len(args) == 3:
            n, m, seed = (int(x) for x in args)
            return f"gnm:{n}:{m}:{seed}", gen_random_gnm(n, m, seed), None
        if family == "gnp" and len(args) == 3:
            n, p, seed = int(args[0]), float(args[1]), int(args[2])
            return f"gnp:{n}:{args[1]}:{seed}", gen_random_gnp(n, p, seed), None
    except ValueError as exc:
        raise ValueError(f"bad generator spec {spec!r}: {exc}") from None
    raise ValueError(f"bad generator spec {spec!r}")


def load_instance(
    spec: str, opts: RunOptions = RunOptions(), registry: Registry | None = None
) -> Instance:
    if spec.startswith("gen:"):
        name, g, opt = parse_gen_spec(spec)
        if opts.complement:
            g = complement(g)
            name = f"{name}~complement"
            opt = None
        return Instance(name, g, opt)

    path = Path(spec)
    g = read_dimacs(path)
    flip = True if opts.complement is None else opts.complement
    if flip:
        g = complement(g)
    registry = registry if registry is not None else load_registry(opts.registry_path)
    known = registry.get(path.name)
    opt = None
    if known is not None and known.complemented == flip and known.n == g.n:
        opt = known.optimal_cover
    return Instance(path.stem, g, opt)


def run_instance(
    spec: str | Instance,
    algorithm: str,
    opts: RunOptions = RunOptions(),
    registry: Registry | None = None,
) -> BenchmarkRecord:
    """Solve one instance with one algorithm and verify the result.

    Only the solve call is timed. A cover that fails verification yields a
    record with ``valid=False``; parse and spec errors propagate.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {sorted(ALGORITHMS)}")
    inst = spec if isinstance(spec, Instance) else load_instance(spec, opts, registry)
    g = inst.graph
    optimum = inst.optimum
    if optimum is None and opts.oracle:
        optimum = baselines.exact_mvc(g, opts.budget).size

    nec_solver.warmup()
    solve = ALGORITHMS[algorithm]
    t0 = time.perf_counter_ns()
    cover, iterations = solve(g, opts)
    elapsed = time.perf_counter_ns() - t0

    report = verify_cover(g, cover)
    if not report.valid:
        log.error("%s/%s: %d uncovered edges", inst.name, algorithm, len(report.uncovered))
    ratio = None
    if optimum is not None and report.valid:
        ratio = selection_ratio(cover.size, optimum)
    return BenchmarkRecord(
        instance=inst.name,
        algorithm=algorithm,
        n=g.n,
        m=g.m,
        cover_size=cover.size,
        optimal=optimum,
        ratio=ratio,
        elapsed_ns=elapsed,
        iterations=iterations,
        seed=opts.seed if algorithm in SEEDED else None,
        valid=report.valid,
        cover=cover.vertices,
    )


def _run_one_instance(
    spec: str, algorithms: Sequence[str], repetitions: int, opts: RunOptions
) -> list[BenchmarkRecord]:
    try:
        inst = load_instance(spec, opts)
        if inst.optimum is None and opts.oracle:
            inst = replace(inst, optimum=baselines.exact_mvc(inst.graph, opts.budget).size)
    except Exception as exc:  # reported per instance, the suite carries on
        log.error("%s: %s", spec, exc)
        return [
            BenchmarkRecord(instance=spec, algorithm=a, error=str(exc))
            for a in algorithms
            for _ in range(repetitions)
        ]
    out = []
    for algo in algorithms:
        for _ in range(repetitions):
            try:
                out.append(run_instance(inst, algo, opts))
            except Exception as exc:
                log.error("%s/%s: %s", inst.name, algo, exc)
                out.append(BenchmarkRecord(instance=inst.name, algorithm=algo, error=str(exc)))
    return out


def run_suite(
    manifest: Sequence[str],
    algorithms: Sequence[str] = ("nec",),
    repetitions: int = 1,
    opts: RunOptions = RunOptions(),
    sink: Callable[[BenchmarkRecord], None] | None = None,
    parallel: bool = False,
) -> list[BenchmarkRecord]:
    """Run every algorithm on every instance, ``repetitions`` times each.

    Records come back in manifest order, then algorithm, then repetition,
    and are handed to ``sink`` in that same order as they complete.
    Instance-level failures become error records rather than aborting.
    """
    if not manifest:
        raise ValueError("empty manifest")
    for a in algorithms:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")

    records: list[BenchmarkRecord] = []
    if parallel:
        with ProcessPoolExecutor() as pool:
            batches = pool.map(
                _run_one_instance,
                manifest,
                [algorithms] * len(manifest),
                [repetitions] * len(manifest),
                [opts] * len(manifest),
            )
            for batch in batches:
                for rec in batch:
                    records.append(rec)
                    if sink:
                        sink(rec)
    else:
        for spec in manifest:
            for rec in _run_one_instance(spec, algorithms, repetitions, opts):
                records.append(rec)
                if sink:
                    sink(rec)
    return records


def read_manifest(path: str | Path) -> list[str]:
    """One instance spec per line; ``#`` starts a comment.

    Relative file paths resolve against the manifest's directory.
    """
    path = Path(path)
    specs = []
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("gen:") and not Path(line).is_absolute():
            line = str(path.parent / line)
        specs.append(line)
    return specs


def _cells(r: BenchmarkRecord, include_timing: bool) -> list[str]:
    def opt(x):
        return "" if x is None else str(x)

    return [
        r.instance,
        r.algorithm,
        opt(r.n),
        opt(r.m),
        opt(r.cover_size),
        opt(r.optimal),
        "" if r.ratio is None else f"{r.ratio:.4f}",
        f"{r.time_ms:.3f}" if include_timing and r.time_ms is not None else "",
        opt(r.iterations),
        opt(r.seed),
        "true" if r.valid else "false",
    ]


def emit_report(
    records: Iterable[BenchmarkRecord], fmt: str = "csv", include_timing: bool = True
) -> str:
    """Render records as CSV or a Markdown pipe table.

    ``time_ms`` carries microsecond resolution (3 decimals). With
    ``include_timing=False`` the column is left blank so that reports of
    repeated runs can be compared byte for byte.
    """
    rows = [_cells(r, include_timing) for r in records]
    if fmt == "csv":
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(rows)
        return out.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(CSV_COLUMNS) + " |", "|" + "---|" * len(CSV_COLUMNS)]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def fit_scaling(points: Iterable[BenchmarkRecord | tuple[float, float]]) -> float:
    """Least-squares slope of log(time) against log(n).

    ``points`` are records (using ``n`` and the elapsed time) or plain
    ``(n, time)`` pairs.
    """
    xs, ys = [], []
    for p in points:
        if isinstance(p, BenchmarkRecord):
            n, t = p.n, p.elapsed_ns
        else:
            n, t = p
        if n is None or t is None or t <= 0 or n <= 0:
            raise ValueError(f"scaling point needs positive size and time, got ({n}, {t})")
        xs.append(n)
        ys.append(t)
    if len(xs) < 4:
        raise ValueError(f"need at least 4 ladder points, got {len(xs)}")
    slope, _ = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(slope)


def scaling_ladder(
    sizes: Sequence[int], algorithm: str = "nec", family: str = "complete", reps: int = 3
) -> list[BenchmarkRecord]:
    """Time ``algorithm`` on a ladder of generated graphs, best of ``reps``."""
    if family != "complete":
        raise ValueError(f"unsupported scaling family {family!r}")
    out = []
    for k in sizes:
        inst = load_instance(f"gen:complete:{k}")
        runs = [run_instance(inst, algorithm) for _ in range(reps)]
        out.append(min(runs, key=lambda r: r.elapsed_ns))
    return out
