"""
Exact width of trees
====================

The tree solver asks, for every node, how many of its neighbors lead into a
side of width at least k.  Three such neighbors force width k + 1.  Here we
compare it with the subset oracle, then build a layout that attains the
width.
"""

import random
import time

from lmwidth import construct_tree_layout, gen_L, k_neighbors, lmw_oracle, tree_lmw
from lmwidth.graph import random_tree

# %%
# Solver against oracle
# ---------------------

rng = random.Random(1)
for n in (6, 9, 12, 15):
    t = random_tree(n, rng)
    print(f"n={n:2d}  tree solver {tree_lmw(t)}  oracle {lmw_oracle(t)[0]}")

# %%
# The L family
# ------------
# The root of L(k) has three (k-1)-neighbors, its three children.

for k in range(1, 6):
    fam = gen_L(k)
    start = time.perf_counter()
    w = tree_lmw(fam.graph)
    print(f"L({k}): {fam.graph.n:4d} vertices, width {w}, {time.perf_counter() - start:.3f}s")
print("(k-1)-neighbors of the root of L(3):", sorted(k_neighbors(gen_L(3).graph, 0, 2)))

# %%
# A layout that attains the width
# -------------------------------

layout, report = construct_tree_layout(gen_L(2).graph)
print("layout of L(2):", layout.order)
print("cut values:", report.cut_values)
