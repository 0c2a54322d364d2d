"""
Squares of L(k) and H(k)
========================

Squaring a tree of width k gives width between k and 2k.  L(k) sits at the
bottom of that range and H(k) at the top.
"""

from lmwidth import gen_H, gen_L, graph_power, h_tree_layout, l_square_layout, mw_of_layout, power_layout_bound, tree_lmw

# %%
# L(k): the square keeps the width
# --------------------------------
# The layout lists the root, then for each middle vertex the recursive
# layout of its copy followed by the middle vertex itself.

for k in range(4):
    fam = gen_L(k)
    sq = graph_power(fam.graph, 2)
    w = mw_of_layout(sq, l_square_layout(k), witnesses=False).width
    print(f"L({k}): tree width {tree_lmw(fam.graph)}, width of L({k})^2 under the layout {w}")

# %%
# H(k): the square doubles it
# ---------------------------

for k in range(3):
    base, sq = power_layout_bound(gen_H(k).graph, h_tree_layout(k), 2)
    print(f"H({k}): {gen_H(k).graph.n:3d} vertices, layout width {base} on the tree, {sq} on the square")

# %%
# Roles
# -----

fam = gen_H(1)
for v, role in enumerate(fam.roles):
    print(v, role)
