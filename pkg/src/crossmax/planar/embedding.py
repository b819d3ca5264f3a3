"""Combinatorial embeddings, face tracing and planar duals.

Darts encode oriented edges: dart ``2*e`` runs from the lower to the higher
endpoint of edge ``e``, dart ``2*e + 1`` runs back.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from crossmax.graph import WeightedGraph

__all__ = [
    "NotPlanarError",
    "RotationSystem",
    "DualGraph",
    "is_planar",
    "planar_embedding",
    "dual_graph",
]


class NotPlanarError(ValueError):
    """The graph admits no planar embedding."""


def _nx_graph(n: int, pairs: Sequence[tuple[int, int]]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(pairs)
    return g


def is_planar(graph: WeightedGraph) -> bool:
    ok, _ = nx.check_planarity(_nx_graph(graph.n, [e[:2] for e in graph.edges]))
    return ok


@dataclass(frozen=True)
class RotationSystem:
    """Clockwise cyclic order of incident edge ids around every node."""

    n: int
    ends: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]

    @staticmethod
    def tail(ends: Sequence[tuple[int, int]], dart: int) -> int:
        return ends[dart >> 1][dart & 1]

    @cached_property
    def _position(self) -> dict[int, int]:
        # dart leaving node u -> index of its edge in rotation[u]
        pos = {}
        for u, rot in enumerate(self.rotation):
            for i, e in enumerate(rot):
                a, _ = self.ends[e]
                pos[2 * e + (0 if a == u else 1)] = i
        return pos

    def next_dart(self, dart: int) -> int:
        """The dart following ``dart`` along its face boundary."""
        e = dart >> 1
        head = self.ends[e][1 - (dart & 1)]
        rot = self.rotation[head]
        i = self._position[dart ^ 1]
        f = rot[(i + 1) % len(rot)]
        return 2 * f + (0 if self.ends[f][0] == head else 1)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Face boundaries as dart cycles, discovered in dart order."""
        seen = [False] * (2 * len(self.ends))
        out = []
        for d in range(len(seen)):
            if seen[d]:
                continue
            cyc = []
            while not seen[d]:
                seen[d] = True
                cyc.append(d)
                d = self.next_dart(d)
            out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        lookup = [0] * (2 * len(self.ends))
        for f, cyc in enumerate(self.faces):
            for d in cyc:
                lookup[d] = f
        return tuple(lookup)

    def components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.ends:
            parent[find(a)] = find(b)
        groups: dict[int, list[int]] = {}
        for u in range(self.n):
            groups.setdefault(find(u), []).append(u)
        return list(groups.values())

    def euler_ok(self) -> bool:
        """Every component satisfies ``n - m + f == 2``."""
        comp_of = [0] * self.n
        comps = self.components()
        for c, nodes in enumerate(comps):
            for u in nodes:
                comp_of[u] = c
        m = [0] * len(comps)
        f = [0] * len(comps)
        for a, _ in self.ends:
            m[comp_of[a]] += 1
        for cyc in self.faces:
            f[comp_of[self.tail(self.ends, cyc[0])]] += 1
        # an isolated node has no darts but still bounds one face
        return all(
            len(nodes) - m[c] + max(f[c], 1) == 2 for c, nodes in enumerate(comps)
        )


def planar_embedding(graph: WeightedGraph) -> RotationSystem:
    """A planar rotation system for ``graph``; raises NotPlanarError otherwise."""
    ends = tuple(e[:2] for e in graph.edges)
    ok, emb = nx.check_planarity(_nx_graph(graph.n, ends))
    if not ok:
        raise NotPlanarError("graph is not planar")
    index = graph.edge_index
    rotation = tuple(
        tuple(index[(min(u, v), max(u, v))] for v in emb.neighbors_cw_order(u))
        if graph.adjacency[u]
        else ()
        for u in range(graph.n)
    )
    rs = RotationSystem(graph.n, ends, rotation)
    if not rs.euler_ok():  # pragma: no cover - would mean a broken embedding
        raise RuntimeError("embedding fails Euler's formula")
    return rs


@dataclass(frozen=True)
class DualGraph:
    """One node per face, one edge per primal edge (same id, same weight).

    ``ends[e]`` holds the faces left of darts ``2e`` and ``2e+1``; a bridge
    yields a self-loop.
    """

    n: int
    ends: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]

    def is_loop(self, e: int) -> bool:
        a, b = self.ends[e]
        return a == b


def dual_graph(graph: WeightedGraph, embedding: RotationSystem | None = None) -> DualGraph:
    if embedding is None:
        embedding = planar_embedding(graph)
    fod = embedding.face_of_dart
    return DualGraph(
        len(embedding.faces),
        tuple((fod[2 * e], fod[2 * e + 1]) for e in range(graph.m)),
        tuple(w for _, _, w in graph.edges),
    )
