"""Cover checking, the penalty objective, and selection ratios."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graph_core import Cover, Graph

__all__ = [
    "VerificationReport",
    "PenaltyParams",
    "verify_cover",
    "penalty_score",
    "selection_ratio",
]


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    uncovered: list[tuple[int, int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class PenaltyParams:
    lam: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        for name in ("lam", "beta"):
            x = getattr(self, name)
            if not (math.isfinite(x) and x >= 0):
                raise ValueError(f"{name} must be finite and >= 0, got {x}")


def _mask(g: Graph, c: Cover | Iterable[int]) -> np.ndarray:
    if not isinstance(c, Cover):
        c = Cover(tuple(c))
    return c.mask(g.n)


def verify_cover(g: Graph, c: Cover | Iterable[int]) -> VerificationReport:
    """Check that every edge has at least one endpoint in ``c``.

    Uncovered edges are returned sorted, as 0-indexed ``(u, v)`` with u < v.
    """
    x = _mask(g, c)
    bad = ~(x[g.edges[:, 0]] | x[g.edges[:, 1]])
    uncovered = [(int(u), int(v)) for u, v in g.edges[bad]]
    return VerificationReport(not uncovered, uncovered)


def penalty_score(
    g: Graph,
    candidate: Cover | Iterable[int],
    reference: Cover | Iterable[int],
    params: PenaltyParams = PenaltyParams(),
) -> float:
    """Coverage-deficit penalty of ``candidate`` relative to ``reference``.

    With ``cov_i(X)`` the number of endpoints of edge ``i`` that lie in
    ``X`` (0, 1 or 2), the score is::

        lam * sum_i exp(cov_i(reference) - cov_i(candidate))
            + beta * hamming(candidate, reference)

    Identical selections score exactly ``lam * m``.
    """
    xc = _mask(g, candidate)
    xr = _mask(g, reference)
    u, v = g.edges[:, 0], g.edges[:, 1]
    cov_c = xc[u].astype(np.int64) + xc[v]
    cov_r = xr[u].astype(np.int64) + xr[v]
    spread = float(np.exp(cov_r - cov_c).sum())
    hamming = int(np.count_nonzero(xc != xr))
    return params.lam * spread + params.beta * hamming


def selection_ratio(candidate_size: int, optimal_size: int) -> float:
    """``candidate_size / optimal_size``; an empty graph's ratio is 1."""
    if optimal_size == 0:
        if candidate_size == 0:
            return 1.0
        raise ValueError("optimal size 0 with a non-empty candidate")
    if optimal_size < 0 or candidate_size < 0:
        raise ValueError("sizes must be non-negative")
    return candidate_size / optimal_size
