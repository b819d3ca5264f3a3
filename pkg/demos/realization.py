"""
High-degree nodes through a cubic realization
=============================================

A node of degree d is replaced by a path of d - 2 nodes, each of degree
at most 3. The path edges get a large negative weight so an optimal cut
never separates them, and contracting them recovers the original cut.
"""

import random

from crossmax import SplitPenalty, brute_force_maxcut, solve_via_realization
from crossmax.generators import random_realized_instance

rng = random.Random(11)
ri = random_realized_instance(rng, 8, max_crossings=2, density=0.8)
g, real = ri.graph, ri.realization

print(f"G: {g.n} nodes, {g.m} edges, max degree {max(g.degree(u) for u in range(g.n))}")
print(f"H: {real.H.n} nodes, {real.H.m} edges, max degree {max(real.H.degree(h) for h in range(real.H.n))}")
print(f"split edges {sorted(real.split_edges)}, penalty {SplitPenalty.of(g).N}")
print(f"crossings in the drawing of H: {ri.config.k}")

res = solve_via_realization(g, real, ri.config)
print(f"value {res.value}, brute force {brute_force_maxcut(g).value}")
print("S =", sorted(res.witness.nodes))
