"""Brute-force reference solvers for small instances.

Deliberately naive: Gray-code enumeration of every bipartition with node 0
pinned to S, updating the cut value one node flip at a time.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator

from crossmax.graph import Cut, PFInstance, WeightedGraph
from crossmax.result import SolveResult, SolveStats

__all__ = [
    "MAX_ORACLE_NODES",
    "InstanceTooLargeError",
    "enumerate_cuts",
    "brute_force_maxcut",
    "brute_force_pf",
    "feasible_cut_values",
]

MAX_ORACLE_NODES = 24


class InstanceTooLargeError(ValueError):
    pass


def enumerate_cuts(graph: WeightedGraph, fixed: frozenset[int] = frozenset()) -> Iterator[tuple[int, int, int]]:
    """Yield ``(mask, value, fixed_cut)`` for all ``2**(n-1)`` bipartitions.

    Bit ``u`` of ``mask`` set means node ``u`` is *outside* S (node 0 is
    always in S). ``fixed_cut`` counts the edges of ``fixed`` in the cut.
    """
    n = graph.n
    if n > MAX_ORACLE_NODES:
        raise InstanceTooLargeError(f"{n} nodes exceeds the oracle cap of {MAX_ORACLE_NODES}")
    if n == 0:
        yield 0, 0, 0
        return
    nbrs = [[(v, graph.edges[e][2], e in fixed) for v, e in graph.adjacency[u]] for u in range(n)]
    mask, value, fcut = 0, 0, 0
    yield mask, value, fcut
    for i in range(1, 1 << (n - 1)):
        u = (i & -i).bit_length()  # flipped node; node 0 never moves
        bit = 1 << u
        for v, w, is_fixed in nbrs[u]:
            # edge uv currently cut iff u and v are on different sides
            was_cut = bool(mask & bit) != bool(mask >> v & 1)
            if was_cut:
                value -= w
                fcut -= is_fixed
            else:
                value += w
                fcut += is_fixed
        mask ^= bit
        yield mask, value, fcut


def _side(n: int, mask: int) -> tuple[bool, ...]:
    return tuple(not (mask >> u & 1) for u in range(n))


def brute_force_maxcut(graph: WeightedGraph) -> Cut:
    """Maximum cut by exhaustive enumeration (first maximum in Gray order)."""
    best_mask, best = 0, None
    for mask, value, _ in enumerate_cuts(graph):
        if best is None or value > best:
            best_mask, best = mask, value
    return Cut(_side(graph.n, best_mask), best)


def brute_force_pf(inst: PFInstance) -> SolveResult:
    """Maximum cut containing every fixed edge, or -inf when none exists."""
    need = len(inst.fixed)
    best_mask, best = 0, None
    for mask, value, fcut in enumerate_cuts(inst.graph, inst.fixed):
        if fcut == need and (best is None or value > best):
            best_mask, best = mask, value
    if best is None:
        return SolveResult.infeasible(SolveStats())
    return SolveResult(best, Cut(_side(inst.graph.n, best_mask), best), SolveStats())


def feasible_cut_values(inst: PFInstance) -> Counter[int]:
    """Multiset of values over all feasible bipartitions (node 0 pinned)."""
    need = len(inst.fixed)
    return Counter(value for _, value, fcut in enumerate_cuts(inst.graph, inst.fixed) if fcut == need)
