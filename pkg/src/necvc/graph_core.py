"""Undirected simple graphs, DIMACS I/O, complementation and generators.

Vertices are ``0..n-1`` everywhere inside the package. The 1-indexed DIMACS
convention only exists at the parse/serialize boundary.
"""

from __future__ import annotations

import io
import warnings
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import IO, Iterable, Iterator, Sequence

import numpy as np
import scipy.sparse as sp

__all__ = [
    "Graph",
    "EdgeList",
    "Cover",
    "DimacsError",
    "DuplicateEdgeWarning",
    "parse_edge_list",
    "parse_dimacs",
    "read_dimacs",
    "to_dimacs",
    "complement",
    "gen_complete",
    "gen_bipartite",
    "gen_random_gnm",
    "gen_random_gnp",
    "gen_path",
    "gen_cycle",
    "gen_petersen",
    "gen_hamming",
    "gen_johnson",
    "parse_cover",
    "format_cover",
    "make_rng",
]

SEED_MASK = (1 << 64) - 1


class DimacsError(ValueError):
    """Raised for malformed DIMACS input."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DuplicateEdgeWarning(UserWarning):
    pass


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class Graph:
    """Immutable undirected simple graph.

    Parameters
    ----------
    n : int
        Number of vertices; vertices are ``0..n-1``.
    edges : iterable of (int, int)
        0-indexed pairs. Orientation is irrelevant and duplicates are
        collapsed, but self-loops and out-of-range endpoints raise
        ``ValueError``.

    Attributes
    ----------
    edges : ndarray, shape (m, 2)
        Sorted lexicographically, ``u < v`` in every row. Read-only.
    degree : ndarray, shape (n,)
        Static degrees. Read-only.
    indptr, indices : ndarray
        CSR adjacency. ``indices[indptr[v]:indptr[v+1]]`` is the sorted
        neighbor list of ``v``.
    """

    __slots__ = ("n", "edges", "degree", "indptr", "indices", "duplicates", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] | np.ndarray = ()):
        n = int(n)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
        if arr.size == 0:
            arr = np.empty((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edges must be a sequence of pairs")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise ValueError(f"edge endpoint out of range for n={n}")
        if np.any(arr[:, 0] == arr[:, 1]):
            v = int(arr[arr[:, 0] == arr[:, 1]][0, 0])
            raise ValueError(f"self-loop at vertex {v}")
        arr = np.sort(arr, axis=1)
        uniq = np.unique(arr, axis=0) if len(arr) else arr
        self.n = n
        self.duplicates = len(arr) - len(uniq)
        self.edges = _frozen(np.ascontiguousarray(uniq))

        both = np.concatenate([uniq, uniq[:, ::-1]]) if len(uniq) else uniq
        order = np.lexsort((both[:, 1], both[:, 0])) if len(both) else np.empty(0, dtype=np.intp)
        both = both[order]
        self.indices = _frozen(np.ascontiguousarray(both[:, 1]))
        self.degree = _frozen(np.bincount(both[:, 0], minlength=n).astype(np.int64))
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(self.degree, out=indptr[1:])
        self.indptr = _frozen(indptr)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    @property
    def adj(self) -> list[np.ndarray]:
        return [self.neighbors(v) for v in range(self.n)]

    @cached_property
    def adjacency_matrix(self) -> sp.csr_matrix:
        """Sparse 0/1 adjacency (int64) sharing the graph's CSR layout."""
        data = np.ones(len(self.indices), dtype=np.int64)
        return sp.csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edges]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Cover:
    """A vertex set, kept in the order the producing algorithm selected it."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("cover contains repeated vertices")
        object.__setattr__(self, "vertices", vs)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.as_set()

    def as_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def sorted(self) -> list[int]:
        return sorted(self.vertices)

    def mask(self, n: int) -> np.ndarray:
        x = np.zeros(n, dtype=bool)
        if self.vertices:
            idx = np.fromiter(self.vertices, dtype=np.int64)
            if idx.min() < 0 or idx.max() >= n:
                raise ValueError(f"cover vertex out of range for n={n}")
            x[idx] = True
        return x


# --------------------------------------------------------------------------
# DIMACS


@dataclass(frozen=True)
class EdgeList:
    """Raw parse result: declared sizes and 1-indexed pairs as read."""

    n: int
    pairs: tuple[tuple[int, int], ...]
    declared_m: int | None = None

    def to_graph(self) -> Graph:
        g = Graph(self.n, [(u - 1, v - 1) for u, v in self.pairs])
        if g.duplicates:
            warnings.warn(
                f"{g.duplicates} duplicate edge(s) collapsed", DuplicateEdgeWarning, stacklevel=3
            )
        if self.declared_m is not None and self.declared_m != g.m:
            warnings.warn(
                f"problem line declares {self.declared_m} edges, found {g.m} distinct",
                DuplicateEdgeWarning,
                stacklevel=3,
            )
        return g


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise DimacsError(f"expected integer, got {tok!r}", lineno) from None


def _lines(source: str | IO[str]) -> Iterable[str]:
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def parse_edge_list(source: str | IO[str]) -> EdgeList:
    n = None
    declared_m = None
    pairs: list[tuple[int, int]] = []
    for lineno, line in enumerate(_lines(source), 1):
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        kind = toks[0]
        if kind == "p":
            if n is not None:
                raise DimacsError("duplicate problem line", lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise DimacsError(f"malformed problem line {line.strip()!r}", lineno)
            n = _int(toks[2], lineno)
            declared_m = _int(toks[3], lineno)
            if n < 0 or declared_m < 0:
                raise DimacsError("negative size on problem line", lineno)
        elif kind == "e":
            if n is None:
                raise DimacsError("edge line before problem line", lineno)
            if len(toks) != 3:
                raise DimacsError(f"malformed edge line {line.strip()!r}", lineno)
            u, v = _int(toks[1], lineno), _int(toks[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"endpoint out of range 1..{n}: e {u} {v}", lineno)
            if u == v:
                raise DimacsError(f"self-loop at vertex {u}", lineno)
            pairs.append((u, v))
        else:
            raise DimacsError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise DimacsError("missing problem line")
    return EdgeList(n, tuple(pairs), declared_m)


def parse_dimacs(source: str | IO[str]) -> Graph:
    """Parse DIMACS ASCII edge format into a :class:`Graph`.

    Duplicate ``e`` lines (in either orientation) are collapsed with a
    :class:`DuplicateEdgeWarning`; the declared edge count is advisory.
    """
    return parse_edge_list(source).to_graph()


def read_dimacs(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_dimacs(fh)


def to_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}\n"]
    out.extend(f"e {u + 1} {v + 1}\n" for u, v in g.edges.tolist())
    return "".join(out)


# --------------------------------------------------------------------------
# cover files: one 1-indexed vertex per line, `c` comments


def parse_cover(source: str | IO[str], n: int | None = None) -> Cover:
    verts = []
    for lineno, line in enumerate(_lines(source), 1):
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        if len(toks) != 1:
            raise DimacsError(f"expected one vertex id, got {line.strip()!r}", lineno)
        v = _int(toks[0], lineno)
        if v < 1 or (n is not None and v > n):
            raise DimacsError(f"vertex id {v} out of range", lineno)
        verts.append(v - 1)
    return Cover(tuple(verts))


def format_cover(cover: Cover | Iterable[int]) -> str:
    return "".join(f"{v + 1}\n" for v in sorted(cover))


# --------------------------------------------------------------------------
# transforms and generators


def _pair_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(n, k=1)


def complement(g: Graph) -> Graph:
    """Graph on the same vertices with exactly the non-edges of ``g``."""
    n = g.n
    dense = np.zeros((n, n), dtype=bool)
    if g.m:
        dense[g.edges[:, 0], g.edges[:, 1]] = True
    iu, ju = _pair_index(n)
    keep = ~dense[iu, ju]
    return Graph(n, np.column_stack([iu[keep], ju[keep]]))


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator keyed by a 64-bit seed (negative seeds wrap mod 2**64)."""
    return np.random.Generator(np.random.PCG64(int(seed) & SEED_MASK))


def gen_complete(k: int) -> Graph:
    if k < 1:
        raise ValueError(f"complete graph needs k >= 1, got {k}")
    iu, ju = _pair_index(k)
    return Graph(k, np.column_stack([iu, ju]))


def gen_bipartite(m: int, n: int) -> Graph:
    """Complete bipartite K(m, n); side L is ``0..m-1``, side R is ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise ValueError(f"bipartite sides must be positive, got ({m}, {n})")
    left, right = np.meshgrid(np.arange(m), np.arange(m, m + n), indexing="ij")
    return Graph(m + n, np.column_stack([left.ravel(), right.ravel()]))


def gen_random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with exactly ``m`` edges, sampled without replacement."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"m must lie in [0, {total}], got {m}")
    iu, ju = _pair_index(n)
    pick = make_rng(seed).choice(total, size=m, replace=False)
    return Graph(n, np.column_stack([iu[pick], ju[pick]]))


def gen_random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pairs are drawn in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    iu, ju = _pair_index(n)
    keep = make_rng(seed).random(len(iu)) < p
    return Graph(n, np.column_stack([iu[keep], ju[keep]]))


def gen_path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def gen_hamming(bits: int, dist: int) -> Graph:
    """Vertices are bit strings; edge iff Hamming distance >= ``dist``."""
    n = 1 << bits
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if (u ^ v).bit_count() >= dist])


def gen_johnson(n: int, w: int, dist: int) -> Graph:
    """Vertices are ``w``-subsets of ``n`` points; edge iff set distance >= ``dist``."""
    subsets = [frozenset(c) for c in combinations(range(n), w)]
    return Graph(
        len(subsets),
        [
            (i, j)
            for i, j in combinations(range(len(subsets)), 2)
            if len(subsets[i] ^ subsets[j]) >= dist
        ],
    )
