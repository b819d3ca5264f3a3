"""Minimum-weight perfect matchings and minimum-weight T-joins."""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Mapping, Sequence

import networkx as nx

__all__ = ["NoTJoinError", "min_weight_perfect_matching", "min_weight_t_join", "shortest_paths"]


class NoTJoinError(ValueError):
    """Some connected component holds an odd number of terminals."""


def min_weight_perfect_matching(
    n: int, weights: Mapping[tuple[int, int], int] | Sequence[Sequence[int]]
) -> list[tuple[int, int]]:
    """Minimum-weight perfect matching of the complete graph on ``n`` nodes.

    ``weights`` is a symmetric matrix or a mapping keyed by pairs ``(i, j)``
    with ``i < j``. Integer weights are handled exactly. Returns sorted
    pairs ``(i, j)`` with ``i < j``.
    """
    if n % 2:
        raise ValueError(f"perfect matching needs an even node count, got {n}")
    if n == 0:
        return []
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            w = weights[(i, j)] if isinstance(weights, Mapping) else weights[i][j]
            g.add_edge(i, j, weight=w)
    pairs = sorted((min(a, b), max(a, b)) for a, b in nx.min_weight_matching(g))
    if len(pairs) * 2 != n:  # pragma: no cover - complete graphs always match
        raise RuntimeError("matching is not perfect")
    return pairs


def shortest_paths(
    n: int,
    ends: Sequence[tuple[int, int]],
    weights: Sequence[int],
    source: int,
) -> tuple[list[int | None], list[int]]:
    """Dijkstra over a multigraph given by edge endpoints.

    Returns ``(dist, pred_edge)`` where unreachable nodes have distance None
    and ``pred_edge[u]`` is the edge used to reach ``u`` (-1 at the source).
    Loops are ignored.
    """
    return _dijkstra(_adjacency(n, ends), weights, source)


def min_weight_t_join(
    n: int,
    ends: Sequence[tuple[int, int]],
    weights: Sequence[int],
    terminals: Iterable[int],
) -> set[int]:
    """Edge set of minimum total weight with odd degree exactly at ``terminals``.

    Weights must be non-negative. Terminals are paired per connected
    component by a minimum-weight perfect matching on shortest-path
    distances; the join is the symmetric difference of the matched paths.
    """
    T = sorted(set(terminals))
    if any(w < 0 for w in weights):
        raise ValueError("T-join weights must be non-negative")
    if not T:
        return set()
    ends = list(ends)
    adj = _adjacency(n, ends)

    dists: dict[int, list[int | None]] = {}
    preds: dict[int, list[int]] = {}
    for t in T:
        dists[t], preds[t] = _dijkstra(adj, weights, t)

    # group terminals by reachability
    groups: list[list[int]] = []
    placed: set[int] = set()
    for t in T:
        if t in placed:
            continue
        grp = [s for s in T if dists[t][s] is not None]
        placed.update(grp)
        groups.append(grp)

    join: set[int] = set()
    for grp in groups:
        if len(grp) % 2:
            raise NoTJoinError(f"component holds an odd number of terminals: {grp}")
        mat = {
            (i, j): dists[grp[i]][grp[j]]
            for i in range(len(grp))
            for j in range(i + 1, len(grp))
        }
        for i, j in min_weight_perfect_matching(len(grp), mat):
            src, dst = grp[i], grp[j]
            pred = preds[src]
            u = dst
            while u != src:
                e = pred[u]
                join ^= {e}
                a, b = ends[e]
                u = a if b == u else b
    return join


def _adjacency(n, ends):
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(ends):
        if a != b:
            adj[a].append((b, e))
            adj[b].append((a, e))
    return adj


def _dijkstra(adj, weights, source):
    n = len(adj)
    dist: list[int | None] = [None] * n
    pred = [-1] * n
    dist[source] = 0
    heap = [(0, source)]
    done = [False] * n
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, e in adj[u]:
            nd = d + weights[e]
            dv = dist[v]
            if dv is None or nd < dv:
                dist[v] = nd
                pred[v] = e
                heapq.heappush(heap, (nd, v))
    return dist, pred
