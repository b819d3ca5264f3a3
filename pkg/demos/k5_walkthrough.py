"""
Maximum cut of K5 through one crossing split
============================================

K5 drawn with a single crossing. Splitting that crossing yields two planar
graphs: one where the endpoints of the crossing edges sit on the same side,
one where they sit on opposite sides. Each is solved in the plane and the
better answer is lifted back.
"""

from pathlib import Path

from crossmax import brute_force_pf, crossing_split, lift_cut, read_instance, solve
from crossmax.planar import is_planar
from crossmax.split import Triplet

fixtures = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
inst = read_instance(fixtures / "k5.txt")
g, X = inst.graph, inst.config
print(f"K5: {g.n} nodes, {g.m} edges, crossings {X.crossings}")

# one split, two planar children with three extra nodes each
tv, tw = crossing_split(Triplet.root(g, X), X.ids[0])
for name, child in (("same side", tv), ("opposite", tw)):
    best = brute_force_pf(child.instance)
    lifted = lift_cut(best.witness, child.lineage, child.instance)
    print(
        f"{name:>9}: {child.graph.n} nodes, planar={is_planar(child.graph)}, "
        f"best={best.value}, S={sorted(lifted.nodes)}"
    )

# the solver does the same, with a planar engine at the leaves
res = solve(g, X)
print(f"solve: value {res.value}, S = {sorted(res.witness.nodes)}, base cases {res.stats.base_cases}")
