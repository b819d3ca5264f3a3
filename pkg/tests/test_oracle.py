import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_graph
from crossmax.generators import complete_graph
from crossmax.graph import PFInstance, WeightedGraph, cut_value
from crossmax.oracle import (
    MAX_ORACLE_NODES,
    InstanceTooLargeError,
    brute_force_maxcut,
    brute_force_pf,
    enumerate_cuts,
    feasible_cut_values,
)
from crossmax.result import NEG_INF

TRIANGLE = complete_graph(3)


def test_single_positive_edge():
    assert brute_force_maxcut(WeightedGraph.from_edges(2, [(0, 1, 7)])).value == 7


@pytest.mark.parametrize("n", range(1, 9))
def test_unit_complete_graphs_match_closed_form(n):
    assert brute_force_maxcut(complete_graph(n)).value == n * n // 4


def test_all_negative_weights_give_empty_cut():
    g = WeightedGraph.from_edges(3, [(0, 1, -1), (1, 2, -4)])
    cut = brute_force_maxcut(g)
    assert cut.value == 0
    assert all(cut.side)


def test_empty_graph():
    assert brute_force_maxcut(WeightedGraph(0)).value == 0


def test_pf_without_fixed_edges_is_plain_max_cut():
    g = random_graph(random.Random(3), 8)
    assert brute_force_pf(PFInstance(g)).value == brute_force_maxcut(g).value


def test_pf_odd_cycle_is_infeasible():
    res = brute_force_pf(PFInstance(TRIANGLE, {0, 1, 2}))
    assert res.value == NEG_INF
    assert res.witness is None


def test_pf_one_fixed_triangle_edge():
    assert brute_force_pf(PFInstance(TRIANGLE, {0})).value == 2


def test_size_cap():
    big = WeightedGraph(MAX_ORACLE_NODES + 1)
    with pytest.raises(InstanceTooLargeError):
        brute_force_maxcut(big)
    with pytest.raises(InstanceTooLargeError):
        brute_force_pf(PFInstance(big))


@given(st.integers(0, 2**32), st.integers(1, 9))
def test_enumeration_visits_every_bipartition_once(seed, n):
    g = random_graph(random.Random(seed), n)
    seen = set()
    for mask, value, _ in enumerate_cuts(g):
        assert not mask & 1
        side = tuple(not (mask >> u & 1) for u in range(n))
        assert value == cut_value(g, side)
        seen.add(mask)
    assert len(seen) == 2 ** (n - 1)


@given(st.integers(0, 2**32), st.integers(1, 8))
def test_oracle_invariant_under_relabelling(seed, n):
    rng = random.Random(seed)
    g = random_graph(rng, n)
    perm = list(range(n))
    rng.shuffle(perm)
    assert brute_force_maxcut(g.relabel(perm)).value == brute_force_maxcut(g).value


@given(st.integers(0, 2**32), st.integers(1, 8))
def test_pf_oracle_matches_direct_search(seed, n):
    rng = random.Random(seed)
    g = random_graph(rng, n, p=0.6)
    fixed = frozenset(e for e in range(g.m) if rng.random() < 0.3)
    values = [
        cut_value(g, bits)
        for bits in itertools.product((False, True), repeat=n)
        if all(bits[g.edges[f][0]] != bits[g.edges[f][1]] for f in fixed)
    ]
    res = brute_force_pf(PFInstance(g, fixed))
    assert res.value == (max(values) if values else NEG_INF)
    # each cut appears twice in the full product, once per orientation
    assert sum(feasible_cut_values(PFInstance(g, fixed)).values()) * 2 == len(values)
