"""
Checking spectral inequalities
==============================

Each checker compares two sides of an inequality and returns a record with
a signed margin (``rhs - lhs``).  Proven bounds are tagged ``theorem`` or
``bound``; claims that are known to be questionable are tagged ``audit`` and
reported whichever way they go.
"""

# %%
import math

from degdev.generators import all_graphs, complete_bipartite, cycle, star
from degdev.inequalities import (
    check_irregularity_bounds,
    check_min_sum,
    check_pair_lower,
    check_pair_upper_audit,
    haemers_scan,
    lear_split,
    star_pair_example,
    tightness_ratios,
)

# %%
# Irregularity ``mu - 2m/n`` is squeezed between ``var`` and ``sqrt(s)``.
for r in check_irregularity_bounds(star(6)):
    print(f"{r.name:13s} {r.lhs:8.4f} <= {r.rhs:8.4f}  margin {r.margin:+.4f}")

# %%
# Every graph on five vertices, checked against three of the bounds.
worst = {}
for _, g in all_graphs(5):
    for r in check_pair_lower(g) + [check_min_sum(g), haemers_scan(g)]:
        worst[r.name] = min(worst.get(r.name, float("inf")), r.margin)
print("smallest margins over all graphs on 5 vertices:", worst)

# %%
# Pairing eigenvalues of a graph with those of its complement.  With index
# offset ``n + 2`` the sum is always at most ``-1``; with offset ``n + 1``
# the cycle ``C_4`` already breaks it.
for r in check_pair_upper_audit(cycle(4)):
    flag = "" if r.holds else "  <-- finding"
    print(f"{r.name} k={r.witness['k']} j={r.witness['complement_index']}: {r.lhs:+.3f} <= -1{flag}")

# %%
# Splitting off the half of the vertices with the smallest degrees does not
# always gain ``s/2`` edges; the star ``K_1,3`` misses by one half even
# under the best possible split.
r = lear_split(star(3))
print(r.witness)

# %%
# Star values beside the closed forms that are commonly stated for them.
print(star_pair_example(10))

# %%
# How close do extremal families get to the bounds?  The star's ratio
# against ``sqrt(s)`` creeps up towards ``1/sqrt(2)`` only slowly.  Beyond a
# few hundred leaves the dense eigensolve gets slow, so the closed form
# ``(sqrt(k) - 2k/(k+1)) / sqrt(2k(k-1)/(k+1))`` takes over.
for k in (10, 100, 400):
    print(f"K_1,{k}: upper ratio {tightness_ratios(star(k)).upper_ratio:.4f}")
for k in (3000, 10**6):
    closed = (math.sqrt(k) - 2 * k / (k + 1)) / math.sqrt(2 * k * (k - 1) / (k + 1))
    print(f"K_1,{k}: upper ratio {closed:.4f} (closed form)")
g, _ = complete_bipartite(100, 101)
print("K_100,101 lower ratio:", round(tightness_ratios(g).lower_ratio_sqrt_m, 5))
