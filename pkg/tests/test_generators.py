import random

import pytest

from crossmax.crossings import Status, validate
from crossmax.generators import (
    crossing_family,
    random_drawn_instance,
    random_planar_graph,
    random_realized_instance,
    random_skeleton_instance,
)
from crossmax.mcr import validate_realization
from crossmax.planar import is_planar
from crossmax.solver import solve


def test_planar_generator_is_planar_and_connected():
    rng = random.Random(0)
    for n in range(1, 15):
        g = random_planar_graph(rng, n)
        assert is_planar(g)
        assert len(g.components()) == 1


def test_drawn_instance_respects_budget():
    rng = random.Random(1)
    for _ in range(50):
        d = random_drawn_instance(rng, 8, 3, density=0.8)
        assert d.config.k <= 3
        assert validate(d.graph, d.config).status in (Status.FEASIBLE, Status.REDUCED)


def test_skeleton_instances_are_good_and_feasible():
    rng = random.Random(2)
    for k in range(5):
        d = random_skeleton_instance(rng, 2 * k + 4, k)
        assert d.graph.n == 2 * k + 4
        assert d.config.k <= k
        assert validate(d.graph, d.config).status in (Status.FEASIBLE, Status.REDUCED)


def test_family_has_fixed_core():
    sizes = {crossing_family(k).graph.n for k in range(11)}
    assert sizes == {25}
    assert crossing_family(0).graph.m == 40
    with pytest.raises(ValueError):
        crossing_family(11)


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_family_branches_fully(k):
    d = crossing_family(k)
    assert solve(d.graph, d.config).stats.base_cases == 2**k


def test_family_weights_are_shared():
    small, big = crossing_family(2), crossing_family(5)
    weights = {(a, b): w for a, b, w in big.graph.edges}
    assert all(weights[a, b] == w for a, b, w in small.graph.edges)


def test_realized_instances_are_valid():
    rng = random.Random(3)
    for _ in range(30):
        ri = random_realized_instance(rng, rng.randint(2, 9))
        assert validate_realization(ri.graph, ri.realization)
        assert validate(ri.realization.H, ri.config).status in (Status.FEASIBLE, Status.REDUCED)
