"""
Graph powers and the width of a layout
======================================

Squaring a graph joins every pair at distance two.  A fixed layout can at
most double its MIM-width under any power, and the diameter power is a
clique, whose width is 1.
"""

# %%
# A path and its square
# ---------------------

import random

from lmwidth import LinearLayout, graph_power, lmw_oracle, mw_of_layout, power_layout_bound
from lmwidth.graph import diameter, path_graph, random_tree

p6 = path_graph(6)
natural = LinearLayout.identity(6)
print("P6 edges:", p6.sorted_edges())
print("P6^2 edges:", graph_power(p6, 2).sorted_edges())

report = mw_of_layout(graph_power(p6, 2), natural)
print("cut values of P6^2 under 0..5:", report.cut_values)
print("a widest cut and its induced matching:", report.to_json()["witness_cut"], report.to_json()["witness_edges"])

# %%
# The doubling bound
# ------------------
# Random trees under random layouts: the powered width never passes twice
# the base width.

rng = random.Random(0)
worst = 0.0
for _ in range(50):
    t = random_tree(rng.randint(4, 12), rng)
    order = list(range(t.n))
    rng.shuffle(order)
    base, sq = power_layout_bound(t, LinearLayout(tuple(order)), 2)
    worst = max(worst, sq / base)
print("largest ratio mw(sigma, T^2) / mw(sigma, T) seen:", worst)

# %%
# Collapse at the diameter
# ------------------------

t = random_tree(10, rng)
d = diameter(t)
for m in range(1, d + 1):
    print(f"lmw(T^{m}) =", lmw_oracle(graph_power(t, m))[0])
