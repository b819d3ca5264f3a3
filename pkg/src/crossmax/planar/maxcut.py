"""Exact maximum cut of a planar graph through its dual.

Cuts of a connected plane graph are exactly the edge sets whose duals form
even-degree subgraphs. Start from the duals of all positive edges, then fix
the odd-degree faces with a minimum T-join under absolute weights.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

from crossmax.graph import Cut, WeightedGraph
from crossmax.planar.embedding import RotationSystem, dual_graph, planar_embedding
from crossmax.planar.tjoin import min_weight_t_join

__all__ = ["max_cut_planar", "recover_partition", "PartitionError"]


class PartitionError(RuntimeError):
    """The given edge set is not a cut of the graph."""


def recover_partition(graph: WeightedGraph, cut_edges: Iterable[int]) -> tuple[bool, ...]:
    """Sides S such that delta(S) is exactly ``cut_edges``.

    The smallest node of every component is placed outside S.
    """
    flip = [False] * graph.m
    for e in cut_edges:
        flip[e] = True
    side: list[bool | None] = [None] * graph.n
    for s in range(graph.n):
        if side[s] is not None:
            continue
        side[s] = False
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v, e in graph.adjacency[u]:
                want = side[u] ^ flip[e]
                if side[v] is None:
                    side[v] = want
                    queue.append(v)
                elif side[v] != want:
                    raise PartitionError(f"parity conflict at edge {e}")
    return tuple(bool(s) for s in side)


def max_cut_planar(graph: WeightedGraph, embedding: RotationSystem | None = None) -> Cut:
    """Maximum cut of a planar graph; raises NotPlanarError otherwise.

    The dual of a disconnected graph splits into one part per component,
    so the T-join below is computed per dual component.
    """
    if graph.m == 0:
        return Cut((False,) * graph.n, 0)
    if embedding is None:
        embedding = planar_embedding(graph)
    dual = dual_graph(graph, embedding)

    parity = [0] * dual.n
    for e, (a, b) in enumerate(dual.ends):
        if dual.weights[e] > 0:
            parity[a] ^= 1
            parity[b] ^= 1
    odd = [f for f in range(dual.n) if parity[f]]
    join = min_weight_t_join(dual.n, dual.ends, [abs(w) for w in dual.weights], odd)

    chosen = [w > 0 for w in dual.weights]
    for e in join:
        chosen[e] = not chosen[e]
    cut_edges = [e for e in range(graph.m) if chosen[e]]
    side = recover_partition(graph, cut_edges)
    value = sum(graph.edges[e][2] for e in cut_edges)
    return Cut(side, value)
