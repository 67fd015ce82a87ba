"""Reference covers: matching 2-approximation, plain greedy, exact search."""

from __future__ import annotations

from itertools import combinations

from .graph_core import Cover, Graph, make_rng
from .nec_solver import greedy_order, nec_cover

__all__ = [
    "BudgetExhausted",
    "matching_2approx",
    "greedy_degree",
    "exact_mvc",
    "brute_force_mvc",
    "matching_lower_bound",
]


class BudgetExhausted(RuntimeError):
    """Exact search ran out of node expansions before proving optimality.

    ``best`` is the smallest cover seen (valid but not proven minimal) and
    ``lower_bound`` a proven bound on the optimum.
    """

    def __init__(self, best: Cover, lower_bound: int, expansions: int):
        self.best = best
        self.lower_bound = lower_bound
        self.expansions = expansions
        super().__init__(
            f"budget of {expansions} expansions exhausted; optimum in "
            f"[{lower_bound}, {best.size}]"
        )


def matching_2approx(g: Graph, seed: int = 0) -> Cover:
    """Take both ends of uncovered edges visited in seeded random order.

    The picked edges form a maximal matching, so the result is at most twice
    the optimum.
    """
    taken = [False] * g.n
    chosen = []
    edges = g.edges.tolist()
    for i in make_rng(seed).permutation(len(edges)).tolist():
        u, v = edges[i]
        if not taken[u] and not taken[v]:
            taken[u] = taken[v] = True
            chosen += (u, v)
    return Cover(tuple(chosen))


def greedy_degree(g: Graph) -> Cover:
    return Cover(tuple(greedy_order(g).tolist()))


def matching_lower_bound(g: Graph) -> int:
    """Size of a greedy maximal matching over the sorted edge list."""
    taken = [False] * g.n
    size = 0
    for u, v in g.edges.tolist():
        if not taken[u] and not taken[v]:
            taken[u] = taken[v] = True
            size += 1
    return size


def _matching_bound(adj: dict[int, set[int]]) -> int:
    taken = set()
    size = 0
    for u in sorted(adj):
        if u in taken:
            continue
        for v in sorted(adj[u]):
            if v not in taken:
                taken.update((u, v))
                size += 1
                break
    return size


def _remove(adj: dict[int, set[int]], v: int) -> None:
    for u in adj.pop(v):
        nb = adj[u]
        nb.discard(v)
        if not nb:
            del adj[u]


def exact_mvc(g: Graph, budget: int | None = 1_000_000) -> Cover:
    """Minimum vertex cover by branch and bound.

    Branches on a maximum-degree vertex ``v``: either ``v`` joins the cover
    or all of its neighbours do. Pendant vertices force their neighbour into
    the cover, and a maximal matching on the residual graph prunes branches
    that cannot beat the incumbent. The NEC cover seeds the incumbent.

    Raises
    ------
    BudgetExhausted
        If more than ``budget`` search nodes are expanded. ``None`` means no
        limit.
    """
    seed_cover, _ = nec_cover(g)
    best = list(seed_cover.vertices)
    expansions = 0
    root_lb = matching_lower_bound(g)

    def search(adj: dict[int, set[int]], chosen: list[int]) -> None:
        nonlocal best, expansions
        expansions += 1
        if budget is not None and expansions > budget:
            raise BudgetExhausted(Cover(tuple(best)), root_lb, budget)
        adj = {v: set(nb) for v, nb in adj.items()}
        chosen = list(chosen)

        pendant = True
        while pendant:
            pendant = False
            for v in sorted(adj):
                if v in adj and len(adj[v]) == 1:
                    (u,) = adj[v]
                    chosen.append(u)
                    _remove(adj, u)
                    pendant = True
        if not adj:
            if len(chosen) < len(best):
                best = chosen
            return
        if len(chosen) + _matching_bound(adj) >= len(best):
            return

        v = max(sorted(adj), key=lambda x: len(adj[x]))
        with_v = {x: set(nb) for x, nb in adj.items()}
        _remove(with_v, v)
        search(with_v, chosen + [v])

        nbrs = sorted(adj[v])
        for u in nbrs:
            if u in adj:
                _remove(adj, u)
        search(adj, chosen + nbrs)

    adj = {v: set(g.neighbors(v).tolist()) for v in range(g.n) if g.degree[v]}
    if adj:
        search(adj, [])
    return Cover(tuple(sorted(best)))


def brute_force_mvc(g: Graph) -> Cover:
    """Smallest cover by enumerating subsets in order of size (small n only)."""
    if g.n > 24:
        raise ValueError(f"brute force refused for n={g.n} > 24")
    edges = g.edges.tolist()
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            s = set(subset)
            if all(u in s or v in s for u, v in edges):
                return Cover(subset)
    raise AssertionError("unreachable: the full vertex set is a cover")
