import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_graph
from crossmax.crossings import CrossingConfiguration, NonGoodConfigurationError, Status, validate
from crossmax.drawing import straight_line_crossings
from crossmax.generators import complete_graph, random_drawn_instance, random_skeleton_instance
from crossmax.graph import Cut, PFInstance, WeightedGraph, cut_value, is_feasible_cut
from crossmax.oracle import brute_force_pf, feasible_cut_values
from crossmax.planar import is_planar
from crossmax.split import (
    InfeasibleCutError,
    SplitError,
    Triplet,
    bisubdivide,
    crossing_split,
    identify,
    lift_cut,
)

K5 = complete_graph(5)
K5_X = straight_line_crossings(K5, [(0, 0), (20, 0), (10, 20), (8, 6), (12, 7)])


def k5_children():
    return crossing_split(Triplet.root(K5, K5_X), 0)


def test_bisubdivide_path_weights():
    g = WeightedGraph.from_edges(2, [(0, 1, 5)])
    child, nmap = bisubdivide(PFInstance(g), 0, 0)
    v, vb, wb, w = (nmap.labels[k] for k in ("v", "v_bar", "w_bar", "w"))
    weights = {frozenset(e[:2]): e[2] for e in child.graph.edges}
    assert weights == {frozenset({v, vb}): 0, frozenset({vb, wb}): 0, frozenset({wb, w}): 5}
    assert child.fixed_pairs == [(v, vb), (vb, wb)]


def test_bisubdivide_moves_fixed_edge_to_far_segment():
    g = WeightedGraph.from_edges(2, [(0, 1, 5)])
    child, nmap = bisubdivide(PFInstance(g, {0}), 0, 1)
    assert child.fixed == {0, 1, 2}
    assert child.graph.edges[0] == (0, nmap.labels["w_bar"], 5)


def test_bisubdivide_errors():
    inst = PFInstance(WeightedGraph.from_edges(3, [(0, 1, 1)]))
    with pytest.raises(SplitError):
        bisubdivide(inst, 1, 0)
    with pytest.raises(SplitError):
        bisubdivide(inst, 0, 2)


def test_bisubdivide_triangle_keeps_feasible_cuts():
    inst = PFInstance(complete_graph(3))
    child, _ = bisubdivide(inst, 0, 0)
    assert feasible_cut_values(child) == feasible_cut_values(inst)


@given(st.integers(0, 2**32), st.integers(2, 8))
def test_bisubdivide_bijection(seed, n):
    rng = random.Random(seed)
    g = random_graph(rng, n, p=0.6)
    if g.m == 0:
        return
    fixed = {e for e in range(g.m) if rng.random() < 0.3}
    inst = PFInstance(g.with_weights([0 if e in fixed else w for e, (*_, w) in enumerate(g.edges)]), fixed)
    e = rng.randrange(g.m)
    child, _ = bisubdivide(inst, e, g.edges[e][rng.randrange(2)])
    assert child.graph.n == n + 2
    assert child.graph.m == g.m + 2
    assert feasible_cut_values(child) == feasible_cut_values(inst)


def test_identify_leaves():
    g = WeightedGraph.from_edges(4, [(0, 1, 1), (2, 3, 1)])
    child, nmap = identify(PFInstance(g), 1, 3)
    assert child.graph.n == 3
    assert child.graph.degree(nmap.merged) == 2
    assert nmap.parent_to_child == (0, 1, 2, 1)


def test_identify_rewrites_fixed_edges():
    g = WeightedGraph.from_edges(4, [(0, 1, 0), (2, 3, 1)])
    child, nmap = identify(PFInstance(g, {0}), 1, 3)
    assert child.fixed_pairs == [(0, nmap.merged)]


@pytest.mark.parametrize("a, b", [(0, 1), (0, 2), (1, 1), (0, 9)])
def test_identify_preconditions(a, b):
    g = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1)])
    with pytest.raises(SplitError):
        identify(PFInstance(g), a, b)


def test_k5_split_children():
    tv, tw = k5_children()
    for child in (tv, tw):
        assert child.graph.n == 8
        assert child.config.k == 0
        assert is_planar(child.graph)
        assert validate(child.graph, child.config).status is Status.FEASIBLE


def test_merged_node_has_degree_four():
    tv, tw = k5_children()
    assert tv.graph.degree(tv.lineage.labels["v_bar"]) == 4
    assert tw.graph.degree(tw.lineage.labels["w_bar"]) == 4
    assert tv.lineage.labels["x_bar"] == tv.lineage.labels["v_bar"]
    assert tw.lineage.labels["x_bar"] == tw.lineage.labels["w_bar"]


def sides_of(triplet, cut, a, b):
    lab = triplet.lineage.labels
    return cut.side[lab[a]], cut.side[lab[b]]


def test_children_force_relative_sides():
    tv, tw = k5_children()
    for child, same in ((tv, True), (tw, False)):
        res = brute_force_pf(child.instance)
        sv, sx = sides_of(child, res.witness, "v", "x")
        assert (sv == sx) == same
        lifted = lift_cut(res.witness, child.lineage, child.instance)
        v = child.lineage.parent_to_child.index(child.lineage.labels["v"])
        x = child.lineage.parent_to_child.index(child.lineage.labels["x"])
        assert (lifted.side[v] == lifted.side[x]) == same
        assert cut_value(K5, lifted.side) == res.value


def test_k5_split_preserves_optimum():
    tv, tw = k5_children()
    best = max(brute_force_pf(tv.instance).value, brute_force_pf(tw.instance).value)
    assert best == brute_force_pf(PFInstance(K5)).value == 6


def test_lift_rejects_infeasible_child_cut():
    tv, _ = k5_children()
    zero = Cut((False,) * tv.graph.n, 0)
    with pytest.raises(InfeasibleCutError):
        lift_cut(zero, tv.lineage, tv.instance)


def test_split_rejects_adjacent_crossing():
    g = complete_graph(4)
    X = CrossingConfiguration.build([(g.edge_id(0, 1), g.edge_id(0, 2))])
    with pytest.raises(NonGoodConfigurationError):
        crossing_split(Triplet.root(g, X), 0)


def test_split_unknown_crossing():
    with pytest.raises(SplitError):
        crossing_split(Triplet.root(K5, K5_X), 3)


def test_explicit_roles():
    (e, f), = K5_X.crossings.values()
    x, y = K5.edges[f][:2]
    v, w = K5.edges[e][:2]
    tv, tw = crossing_split(Triplet.root(K5, K5_X), 0, roles=(y, x, w, v))
    assert tv.lineage.labels["v"] == y
    assert max(brute_force_pf(tv.instance).value, brute_force_pf(tw.instance).value) == 6
    with pytest.raises(SplitError):
        crossing_split(Triplet.root(K5, K5_X), 0, roles=(v, w, x, v))


def instances(seed, n, k):
    rng = random.Random(seed)
    if rng.random() < 0.5:
        d = random_skeleton_instance(rng, max(n, 2 * k + 3), k)
    else:
        d = random_drawn_instance(rng, n, k, density=0.7)
    return rng, d


@given(st.integers(0, 2**32), st.integers(4, 10), st.integers(1, 4))
def test_split_structure_and_optimum(seed, n, k):
    rng, d = instances(seed, n, k)
    if d.config.k == 0 or d.graph.n > 10:
        return
    parent = Triplet.root(d.graph, d.config)
    chi = rng.choice(d.config.ids)
    children = crossing_split(parent, chi)
    for child in children:
        assert child.graph.n == parent.graph.n + 3
        # each bisubdivision adds two edges; identification removes none
        assert child.graph.m == parent.graph.m + 4
        assert len(child.instance.fixed) == len(parent.instance.fixed) + 4
        assert child.config.k == parent.config.k - 1
        assert chi not in child.config.crossings
        assert validate(child.graph, child.config).status is Status.FEASIBLE
        nm = child.lineage
        for p, c in enumerate(nm.parent_to_child):
            assert p in nm.child_to_parent[c]
    values = [brute_force_pf(c.instance) for c in children]
    assert max(r.value for r in values) == brute_force_pf(parent.instance).value
    for child, r in zip(children, values):
        if r.feasible:
            lifted = lift_cut(r.witness, child.lineage, child.instance)
            assert cut_value(d.graph, lifted.side) == r.value


@given(st.integers(0, 2**32), st.integers(5, 9), st.integers(2, 4))
def test_two_levels_of_splits_lift_through_chain(seed, n, k):
    rng, d = instances(seed, n, k)
    if d.config.k < 2 or d.graph.n > 8:
        return
    root = Triplet.root(d.graph, d.config)
    child = crossing_split(root, d.config.ids[0])[rng.randrange(2)]
    grandchild = crossing_split(child, child.config.ids[0])[rng.randrange(2)]
    r = brute_force_pf(grandchild.instance)
    if not r.feasible:
        return
    lifted = lift_cut(r.witness, [child.lineage, grandchild.lineage], grandchild.instance)
    assert is_feasible_cut(root.instance, lifted.side)
    assert cut_value(d.graph, lifted.side) == r.value
