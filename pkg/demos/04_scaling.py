"""
Running time on complete graphs
===============================

K_n forces n - 1 rounds, each scanning every vertex and the full degree tie,
so the time should grow roughly like n**3.
"""

# %%
from necvc.bench import fit_scaling, scaling_ladder
from necvc.nec_solver import warmup

warmup()
ladder = scaling_ladder([100, 200, 300, 400, 500, 600, 700, 800], "nec", reps=3)
for r in ladder:
    print(f"K{r.n:<5d} cover {r.cover_size:4d}  {r.time_ms:8.2f} ms")
print(f"log-log slope: {fit_scaling(ladder):.2f}")

# %% [markdown]
# Plain greedy on the same ladder, for comparison.

# %%
greedy = scaling_ladder([100, 200, 400, 800], "greedy", reps=3)
print(f"greedy slope: {fit_scaling(greedy):.2f}")
