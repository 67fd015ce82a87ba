"""
NEC on small hand-checkable graphs
==================================

Complete graphs, complete bipartite graphs and a path, traced step by step.
"""

# %%
from necvc.graph_core import gen_bipartite, gen_complete, gen_path
from necvc.nec_solver import SolverStats, apply_candidate, init_state, nec_cover, select_candidate

# %% [markdown]
# A complete graph has no useful tie-breaks: every vertex looks the same, so
# the lowest index wins each round and one vertex is left out.

# %%
cover, stats = nec_cover(gen_complete(5))
print("K5 cover:", cover.sorted(), "rounds:", stats.iterations)

# %% [markdown]
# In K(5, 3) the three right-hand vertices have degree 5 against 3 on the
# left, so NEC takes exactly the smaller side.

# %%
cover, _ = nec_cover(gen_bipartite(5, 3))
print("K(5,3) cover:", cover.sorted())

# %% [markdown]
# On the path 0-1-2-3-4 the first round is a three-way degree tie. Stepping
# through by hand shows which criterion breaks it.

# %%
g = gen_path(5)
s = init_state(g)
stats = SolverStats()
while s.covered_edges < g.m:
    v = select_candidate(g, s, stats)
    apply_candidate(g, s, v)
    stats.iterations += 1
    print(f"take {v}: active degrees now {s.adeg.tolist()}")
print("cover:", s.cover, stats)
