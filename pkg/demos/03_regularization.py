"""
Rewiring a graph towards regularity
===================================

Three procedures change edges to make a graph (nearly) regular and report
every change as a replayable edit script:

* the rough procedure keeps the edge count and brings all degrees within
  one of each other, using at most ``s`` edits;
* its bipartite version works class by class within ``s2`` edits;
* the fine procedure finishes the job on a graph with degrees ``d``/``d+1``
  using at most ``3n/2`` edits.
"""

# %%
from degdev.generators import complete_bipartite, gnp, path, star
from degdev.graph import Graph, degree_profile, edit_distance
from degdev.regularize import (
    bipartite_rough_regularize,
    fine_regularize,
    rho_bounds,
    rho_exact,
    rough_regularize,
)

# %%
# The star ``K_1,5`` has ``s = 20/3``; six edge changes at most.
g = star(5)
out = rough_regularize(g)
print("degrees before:", g.degrees, " after:", out.result.degrees)
print("edits", out.edits, "<= bound", out.certified_bound)
print(out.script.to_text())
assert out.script.replay(g) == out.result

# %%
# On a random graph the script is usually much shorter than the bound.
g = gnp(40, 0.2, seed=7)
out = rough_regularize(g)
print(f"G(40, 0.2): {out.edits} edits, bound {float(out.certified_bound):.1f}, "
      f"spread {max(out.result.degrees) - min(out.result.degrees)}")

# %%
# The fine step then removes the last unit of spread.
fine = fine_regularize(out.result)
print("regular:", fine.result.is_regular(), " edits", fine.edits, "<= bound", fine.certified_bound)

# %%
# Bipartite graphs keep their layout: edges only move within a class.
kb, layout = complete_bipartite(3, 4)
h = Graph(kb.n, frozenset(list(kb.edges)[:7]))
bout = bipartite_rough_regularize(h, layout)
print("class degrees:", bout.result.degrees[:3], bout.result.degrees[3:], " edits", bout.edits,
      "<= bound", bout.certified_bound)

# %%
# For small graphs the exact distance to the nearest regular graph comes
# from enumerating every regular graph on the same vertices.
for name, g in (("P_3", path(3)), ("K_1,3", star(3))):
    lo, hi = rho_bounds(g)
    print(f"{name}: exact {rho_exact(g)}, s/2 = {lo}, s + 3n/2 = {hi}")

# %%
# The upper bound always holds, but ``s/2`` is not a valid lower bound: a
# single edge on five vertices is one deletion away from the empty graph.
one = Graph(5, frozenset({(0, 1)}))
print("single edge on 5 vertices: exact", rho_exact(one), " s/2 =", degree_profile(one).s / 2)
print("edit distance to the empty graph:", edit_distance(one, Graph(5)))
