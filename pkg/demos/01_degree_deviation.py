"""
Degree deviation of a graph
===========================

How far is a graph from being regular?  Two exact measures answer this from
the degree sequence alone: the total absolute deviation ``s`` of degrees
from the average degree ``2m/n`` and the mean squared deviation ``var``.
Both are kept as fractions so comparisons between them never need a
tolerance.
"""

# %%
# A star is as irregular as a tree gets: one hub, many leaves.
from fractions import Fraction

from degdev.generators import complete_bipartite, cycle, star
from degdev.graph import (
    BipartiteLayout,
    Graph,
    degree_profile,
    from_edge_list,
    s2_deviation,
    to_edge_list,
)

for k in (3, 5, 10):
    p = degree_profile(star(k))
    print(f"K_1,{k}: mean degree {p.mean_degree}, s = {p.s}, var = {p.var}")

# %%
# Regular graphs have zero deviation; both measures vanish together.
p = degree_profile(cycle(7))
print("C_7:", p.s, p.var)

# %%
# The two measures always satisfy ``s^2/n^2 <= var <= s``.  Because the
# values are fractions this is an exact comparison.
g = Graph(6, frozenset({(0, 1), (0, 2), (0, 3), (3, 4)}))
p = degree_profile(g)
print(p.s**2 / g.n**2, "<=", p.var, "<=", p.s)
assert p.s**2 / g.n**2 <= p.var <= p.s

# %%
# Bipartite graphs have a class-wise analogue ``s2``: each side is compared
# with its own average degree (``m/a`` or ``m/b``), so a complete bipartite
# graph scores zero even when its sides have different sizes.
kb, layout = complete_bipartite(2, 5)
print("s(K_2,5) =", degree_profile(kb).s, " s2(K_2,5) =", s2_deviation(kb, layout))

h = Graph(4, frozenset({(0, 1), (0, 2)}))
print("s2 of K_1,3 minus an edge:", s2_deviation(h, BipartiteLayout(1)))
assert s2_deviation(h, BipartiteLayout(1)) == Fraction(4, 3)

# %%
# Graphs travel as plain edge lists.  A header ``n m`` (optionally followed
# by ``bipartite a``) precedes exactly ``m`` edge lines.
text = to_edge_list(kb, layout)
print(text)
assert from_edge_list(text) == (kb, layout)
