import itertools
import random
from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_graph
from crossmax.graph import (
    Cut,
    GraphError,
    PFInstance,
    WeightedGraph,
    cut_value,
    is_feasible_cut,
    normalize_graph,
    pf_infeasible,
)

TRIANGLE = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def test_normalize_drops_loops():
    g = normalize_graph(3, [(0, 1, 2), (1, 1, 7), (1, 2, 3)])
    assert g.edges == ((0, 1, 2), (1, 2, 3))


def test_normalize_merges_parallel_edges():
    g = normalize_graph(2, [(0, 1, 2), (1, 0, 3)])
    assert g.edges == ((0, 1, 5),)


def test_normalize_keeps_simple_graph():
    edges = ((0, 1, 4), (0, 2, -1), (1, 2, 0))
    assert normalize_graph(3, edges).edges == edges


def test_normalize_scales_decimals():
    g = normalize_graph(3, [(0, 1, "1.25"), (1, 2, "-3"), (0, 2, Decimal("0.5"))])
    assert g.scale == 2
    assert [w for *_, w in g.edges] == [125, -300, 50]


def test_normalize_explicit_scale_too_small():
    with pytest.raises(GraphError):
        normalize_graph(2, [(0, 1, "0.125")], scale=2)


@pytest.mark.parametrize("bad", ["x", "1e", "nan", "inf", True])
def test_normalize_rejects_malformed_weight(bad):
    with pytest.raises(GraphError):
        normalize_graph(2, [(0, 1, bad)])


def test_normalize_rejects_out_of_range_node():
    with pytest.raises(GraphError):
        normalize_graph(2, [(0, 2, 1)])


@pytest.mark.parametrize(
    "edges",
    [((1, 0, 1),), ((0, 0, 1),), ((0, 1, 1), (0, 1, 2)), ((0, 1, 1.5),), ((0, 3, 1),)],
)
def test_graph_rejects_non_normalized_edges(edges):
    with pytest.raises(GraphError):
        WeightedGraph(3, edges)


@given(st.integers(0, 2**32), st.integers(1, 7))
def test_normalize_preserves_cut_values(seed, n):
    rng = random.Random(seed)
    raw = [(rng.randrange(n), rng.randrange(n), rng.randint(-5, 5)) for _ in range(3 * n)]
    g = normalize_graph(n, raw)
    for mask in range(2**n):
        S = {u for u in range(n) if mask >> u & 1}
        expected = sum(w for u, v, w in raw if (u in S) != (v in S))
        assert cut_value(g, S) == expected


def test_cut_value_examples():
    assert cut_value(TRIANGLE, {0}) == 2
    assert cut_value(TRIANGLE, set()) == 0
    path = WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, -2)])
    assert cut_value(path, {1}) == 1


def test_cut_value_accepts_bool_vector():
    assert cut_value(TRIANGLE, (True, False, False)) == 2


@given(st.integers(0, 2**32), st.integers(1, 9))
def test_cut_value_complement_symmetry(seed, n):
    rng = random.Random(seed)
    g = random_graph(rng, n)
    S = {u for u in range(n) if rng.random() < 0.5}
    assert cut_value(g, S) == cut_value(g, set(range(n)) - S)


@given(st.integers(0, 2**32), st.integers(2, 8), st.integers(2, 8))
def test_bipartite_positive_max_cut_is_total_weight(seed, p, q):
    rng = random.Random(seed)
    edges = [(a, p + b, rng.randint(1, 9)) for a in range(p) for b in range(q) if rng.random() < 0.6]
    g = WeightedGraph.from_edges(p + q, edges)
    assert cut_value(g, set(range(p))) == sum(w for *_, w in edges)


def test_cut_helpers():
    c = Cut.of(TRIANGLE, (False, True, False))
    assert c.value == 2
    assert c.nodes == {1}
    assert c.complement().nodes == {0, 2}
    assert c.normalized().side[0]
    assert c.cut_edges(TRIANGLE) == [0, 1]


def test_is_feasible_cut_examples():
    g = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1)])
    assert is_feasible_cut(PFInstance(g), {0, 2})
    assert is_feasible_cut(PFInstance(g, {0}), {0})
    assert not is_feasible_cut(PFInstance(g, {0}), {0, 1})


def test_pf_instance_rejects_unknown_fixed_edge():
    with pytest.raises(GraphError):
        PFInstance(TRIANGLE, {3})


def test_pf_infeasible_examples():
    assert pf_infeasible(PFInstance(TRIANGLE, {0, 1, 2}))
    c4 = WeightedGraph.from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
    assert not pf_infeasible(PFInstance(c4, {0, 1, 2, 3}))
    assert not pf_infeasible(PFInstance(TRIANGLE))


@given(st.integers(0, 2**32), st.integers(1, 10))
def test_pf_infeasible_matches_enumeration(seed, n):
    rng = random.Random(seed)
    g = random_graph(rng, n, p=0.6)
    fixed = {e for e in range(g.m) if rng.random() < 0.5}
    inst = PFInstance(g, fixed)
    any_feasible = any(
        is_feasible_cut(inst, bits) for bits in itertools.product((False, True), repeat=n)
    )
    assert pf_infeasible(inst) == (not any_feasible)


def test_graph_accessors():
    g = WeightedGraph.from_edges(4, [(2, 0, 5), (1, 3, -1)])
    assert g.edges == ((0, 2, 5), (1, 3, -1))
    assert g.edge_id(2, 0) == 0
    assert g.neighbors(3) == [1]
    assert g.total_abs_weight() == 6
    assert g.components() == [[0, 2], [1, 3]]
    assert g.with_weights([1, 2]).edges == ((0, 2, 1), (1, 3, 2))
    assert g.relabel([3, 2, 1, 0]).edges == ((1, 3, 5), (0, 2, -1))
