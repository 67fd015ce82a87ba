"""Neighbourhood Evaluation Criteria (NEC) greedy vertex cover.

Each round picks one vertex and covers all of its remaining edges. The pick
is decided lexicographically:

1. largest active degree (number of incident edges still uncovered);
2. smallest neighbourhood score, the sum of active degrees over the
   vertex's neighbours;
3. largest deactivation score, the number of neighbours whose active
   degree is exactly 1 (they drop out once the vertex is taken);
4. smallest vertex index.

Criteria 2-4 only ever compare vertices already tied on criterion 1.
Active degrees are maintained incrementally; each round costs one O(V) scan
plus O(sum of degrees of the tied vertices), so O(kV^2) overall for k
selected vertices. The scan and the update run as numba-compiled loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .graph_core import Cover, Graph

__all__ = [
    "SolverState",
    "SolverStats",
    "init_state",
    "select_candidate",
    "apply_candidate",
    "nec_cover",
    "check_state",
    "greedy_order",
    "warmup",
]


@dataclass
class SolverState:
    active: np.ndarray
    adeg: np.ndarray
    covered_edges: int = 0
    cover: list[int] = field(default_factory=list)

    def done(self, g: Graph) -> bool:
        return self.covered_edges >= g.m


@dataclass
class SolverStats:
    iterations: int = 0
    ties_level2: int = 0
    ties_level3: int = 0
    ties_level4: int = 0


def init_state(g: Graph) -> SolverState:
    adeg = np.array(g.degree, dtype=np.int64)
    return SolverState(active=adeg > 0, adeg=adeg)


@njit(cache=True)
def _select(indptr, indices, active, adeg, use_ties):
    """Compiled selection scan; returns (vertex, deciding criterion)."""
    n = len(adeg)
    top = 0
    for v in range(n):
        if active[v] and adeg[v] > top:
            top = adeg[v]
    if top < 1:
        return -1, 0

    tied = np.empty(n, dtype=np.int64)
    k = 0
    for v in range(n):
        if active[v] and adeg[v] == top:
            tied[k] = v
            k += 1
    if k == 1 or not use_ties:
        return tied[0], 1 if k == 1 else 4

    # adeg of an inactive vertex is 0, so it contributes nothing to either score.
    nbhd = np.empty(k, dtype=np.int64)
    deact = np.empty(k, dtype=np.int64)
    low = -1
    for i in range(k):
        v = tied[i]
        a = 0
        d = 0
        for j in range(indptr[v], indptr[v + 1]):
            w = adeg[indices[j]]
            a += w
            if w == 1:
                d += 1
        nbhd[i] = a
        deact[i] = d
        if low < 0 or a < low:
            low = a

    k2 = 0
    high = -1
    for i in range(k):
        if nbhd[i] == low:
            k2 += 1
            if deact[i] > high:
                high = deact[i]
    k3 = 0
    best = -1
    for i in range(k):
        if nbhd[i] == low and deact[i] == high:
            k3 += 1
            if best < 0:
                best = tied[i]
    if k2 == 1:
        return best, 2
    if k3 == 1:
        return best, 3
    return best, 4


@njit(cache=True)
def _apply(indptr, indices, active, adeg, v):
    covered = 0
    for j in range(indptr[v], indptr[v + 1]):
        u = indices[j]
        # (v, u) is still uncovered exactly when u is active.
        if active[u]:
            adeg[u] -= 1
            covered += 1
            if adeg[u] == 0:
                active[u] = False
    adeg[v] = 0
    active[v] = False
    return covered


@njit(cache=True)
def _run(indptr, indices, active, adeg, m, use_ties):
    order = np.empty(len(adeg), dtype=np.int64)
    levels = np.zeros(5, dtype=np.int64)
    covered = 0
    k = 0
    while covered < m:
        v, level = _select(indptr, indices, active, adeg, use_ties)
        if v < 0:
            return order[:k], levels, covered
        covered += _apply(indptr, indices, active, adeg, v)
        levels[level] += 1
        order[k] = v
        k += 1
    return order[:k], levels, covered


def _record(stats: SolverStats | None, level: int) -> None:
    if stats is None:
        return
    if level == 2:
        stats.ties_level2 += 1
    elif level == 3:
        stats.ties_level3 += 1
    elif level == 4:
        stats.ties_level4 += 1


def select_candidate(g: Graph, s: SolverState, stats: SolverStats | None = None) -> int:
    """Return the next vertex NEC would add to the cover.

    ``stats``, when given, records which criterion settled the choice.
    """
    v, level = _select(g.indptr, g.indices, s.active, s.adeg, True)
    if v < 0:
        raise RuntimeError(
            f"no active vertex with uncovered edges but {g.m - s.covered_edges} edges remain"
        )
    _record(stats, level)
    return int(v)


def apply_candidate(g: Graph, s: SolverState, v: int) -> SolverState:
    """Put ``v`` in the cover and cover its remaining edges (in place)."""
    if not s.active[v]:
        raise ValueError(f"vertex {v} is not active")
    s.covered_edges += int(_apply(g.indptr, g.indices, s.active, s.adeg, v))
    s.cover.append(int(v))
    return s


def check_state(g: Graph, s: SolverState) -> None:
    """Recompute active degrees from the cover and compare (debug aid)."""
    in_cover = np.zeros(g.n, dtype=bool)
    in_cover[s.cover] = True
    uncovered = ~(in_cover[g.edges[:, 0]] | in_cover[g.edges[:, 1]])
    adeg = np.bincount(g.edges[uncovered].ravel(), minlength=g.n)
    if not np.array_equal(adeg, s.adeg):
        raise AssertionError("incremental active degrees diverged")
    if s.covered_edges != g.m - int(uncovered.sum()):
        raise AssertionError("covered-edge count diverged")
    if np.any(s.active != (adeg > 0)):
        raise AssertionError("active flags diverged")


def nec_cover(g: Graph, *, debug: bool = False) -> tuple[Cover, SolverStats]:
    """Run NEC to completion.

    Returns the cover in selection order together with per-run statistics;
    ``stats.iterations`` equals the cover size. With ``debug=True`` the
    incremental bookkeeping is checked against a from-scratch recount after
    every step.
    """
    s = init_state(g)
    stats = SolverStats()
    if not debug:
        order, levels, covered = _run(g.indptr, g.indices, s.active, s.adeg, g.m, True)
        if covered != g.m:
            raise RuntimeError("selection stalled with edges uncovered")
        stats.iterations = len(order)
        stats.ties_level2, stats.ties_level3, stats.ties_level4 = (int(x) for x in levels[2:])
        return Cover(tuple(order.tolist())), stats

    while s.covered_edges < g.m:
        before = s.covered_edges
        v = select_candidate(g, s, stats)
        apply_candidate(g, s, v)
        stats.iterations += 1
        check_state(g, s)
        assert s.covered_edges > before
    return Cover(tuple(s.cover)), stats


def greedy_order(g: Graph) -> np.ndarray:
    """Plain max-degree greedy (no tie-breakers beyond lowest index)."""
    s = init_state(g)
    order, _, covered = _run(g.indptr, g.indices, s.active, s.adeg, g.m, False)
    if covered != g.m:
        raise RuntimeError("selection stalled with edges uncovered")
    return order


def warmup() -> None:
    """Compile the kernels so later timings exclude JIT cost."""
    nec_cover(Graph(3, [(0, 1), (1, 2)]))
    greedy_order(Graph(3, [(0, 1), (1, 2)]))
