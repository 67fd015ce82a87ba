"""
DIMACS in, DIMACS out
=====================

Round-trip a generated instance through the text format, complement it the
way clique benchmarks are solved, and compare with the known-optima table.
Pass a directory of real benchmark files as the first argument to solve
those instead.
"""

# %%
import sys
import tempfile
from pathlib import Path

from necvc.bench import RunOptions, emit_report, run_instance
from necvc.graph_core import gen_hamming, parse_dimacs, to_dimacs
from necvc.registry import load_registry

# %%
text = to_dimacs(gen_hamming(6, 2))
print(text.splitlines()[0])
assert parse_dimacs(text) == gen_hamming(6, 2)

# %% [markdown]
# A clique file's optimum cover is ``n - omega``, the minimum cover of its
# complement. ``run_instance`` complements DIMACS files by default and looks
# the optimum up by file name.

# %%
reg = load_registry()
print(reg.get("hamming6-2"))

if len(sys.argv) > 1:
    paths = sorted(Path(sys.argv[1]).glob("*.clq"))
else:
    tmp = Path(tempfile.mkdtemp())
    (tmp / "hamming6-2.clq").write_text(text)
    paths = [tmp / "hamming6-2.clq"]

records = [run_instance(str(p), "nec", RunOptions()) for p in paths]
print(emit_report(records, "markdown"))
