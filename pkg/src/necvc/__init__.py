"""Minimum vertex cover: the NEC greedy heuristic, baselines and a benchmark harness."""

from .baselines import (
    BudgetExhausted,
    brute_force_mvc,
    exact_mvc,
    greedy_degree,
    matching_2approx,
    matching_lower_bound,
)
from .evaluation import PenaltyParams, VerificationReport, penalty_score, selection_ratio, verify_cover
from .graph_core import (
    Cover,
    DimacsError,
    DuplicateEdgeWarning,
    EdgeList,
    Graph,
    complement,
    gen_bipartite,
    gen_complete,
    gen_random_gnm,
    gen_random_gnp,
    parse_dimacs,
    read_dimacs,
    to_dimacs,
)
from .nec_solver import SolverState, SolverStats, apply_candidate, init_state, nec_cover, select_candidate
from .registry import KnownOptimum, load_registry

__version__ = "0.1.0"
