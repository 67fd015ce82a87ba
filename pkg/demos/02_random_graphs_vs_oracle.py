"""
Heuristics against the exact optimum
====================================

Seeded G(n, p) graphs, every algorithm, ratios against branch and bound.
"""

# %%
import numpy as np

from necvc.baselines import exact_mvc, greedy_degree, matching_2approx
from necvc.evaluation import selection_ratio, verify_cover
from necvc.graph_core import gen_random_gnp
from necvc.nec_solver import nec_cover

# %%
ratios = {"nec": [], "greedy": [], "match2": []}
for seed in range(200):
    g = gen_random_gnp(18, 0.3, seed)
    opt = exact_mvc(g).size
    covers = {
        "nec": nec_cover(g)[0],
        "greedy": greedy_degree(g),
        "match2": matching_2approx(g, seed),
    }
    for name, c in covers.items():
        assert verify_cover(g, c).valid
        ratios[name].append(selection_ratio(c.size, opt))

# %% [markdown]
# Mean and worst ratio per algorithm, plus how often each hits the optimum.

# %%
for name, r in ratios.items():
    r = np.array(r)
    print(f"{name:7s} mean {r.mean():.4f}  worst {r.max():.4f}  optimal {np.mean(r == 1.0):.0%}")
