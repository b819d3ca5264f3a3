"""Weighted graphs, cuts and partially-fixed cut instances.

All weights are exact Python integers. Decimal input is scaled once, by a
power of ten recorded on the graph, so every downstream computation stays
in integer arithmetic.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from functools import cached_property

__all__ = [
    "WeightedGraph",
    "Cut",
    "PFInstance",
    "GraphError",
    "normalize_graph",
    "decimal_scale",
    "cut_value",
    "is_feasible_cut",
    "pf_infeasible",
]


class GraphError(ValueError):
    """Malformed graph input."""


Edge = tuple[int, int, int]


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph on nodes ``0..n-1`` with integer edge weights.

    Edges are stored as ``(u, v, weight)`` with ``u < v``; an edge's id is
    its position in :attr:`edges`. ``scale`` is the power of ten the input
    weights were multiplied by. ``names`` optionally labels nodes.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    scale: int = 0
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative node count")
        seen: set[tuple[int, int]] = set()
        for i, (u, v, w) in enumerate(self.edges):
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {i} = ({u}, {v}) is not a normalized pair in range")
            if not isinstance(w, int) or isinstance(w, bool):
                raise GraphError(f"edge {i} has non-integer weight {w!r}")
            if (u, v) in seen:
                raise GraphError(f"parallel edge ({u}, {v})")
            seen.add((u, v))
        if self.names is not None and len(self.names) != self.n:
            raise GraphError("names table does not match node count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]], **kw) -> WeightedGraph:
        """Build from ``(u, v, w)`` triples in any endpoint order."""
        return cls(n, tuple((min(u, v), max(u, v), w) for u, v, w in edges), **kw)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per node, the ``(neighbor, edge id)`` pairs in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge joining ``u`` and ``v``; ``KeyError`` if absent."""
        return self.edge_index[(min(u, v), max(u, v))]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def neighbors(self, u: int) -> list[int]:
        return [v for v, _ in self.adjacency[u]]

    def total_abs_weight(self) -> int:
        return sum(abs(w) for _, _, w in self.edges)

    def with_weights(self, weights: Sequence[int]) -> WeightedGraph:
        """Same topology, new weights (one per edge id)."""
        if len(weights) != self.m:
            raise GraphError("weight vector length does not match edge count")
        return WeightedGraph(
            self.n,
            tuple((u, v, w) for (u, v, _), w in zip(self.edges, weights)),
            self.scale,
            self.names,
        )

    def components(self) -> list[list[int]]:
        """Connected components as sorted node lists, ordered by smallest node."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for v, _ in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        stack.append(v)
            out.append(sorted(comp))
        return out

    def relabel(self, perm: Sequence[int]) -> WeightedGraph:
        """Graph with node ``u`` renamed ``perm[u]``; edge ids are preserved."""
        return WeightedGraph.from_edges(
            self.n, ((perm[u], perm[v], w) for u, v, w in self.edges), scale=self.scale
        )


@dataclass(frozen=True)
class Cut:
    """Node bipartition; ``side[u]`` is true iff ``u`` lies in S."""

    side: tuple[bool, ...]
    value: int

    @classmethod
    def of(cls, graph: WeightedGraph, side: Sequence[bool]) -> Cut:
        side = tuple(bool(s) for s in side)
        return cls(side, cut_value(graph, side))

    @property
    def nodes(self) -> frozenset[int]:
        """The set S."""
        return frozenset(u for u, s in enumerate(self.side) if s)

    def complement(self) -> Cut:
        return Cut(tuple(not s for s in self.side), self.value)

    def normalized(self) -> Cut:
        """The same cut, oriented so that node 0 lies in S."""
        if self.side and not self.side[0]:
            return self.complement()
        return self

    def cut_edges(self, graph: WeightedGraph) -> list[int]:
        return [i for i, (u, v, _) in enumerate(graph.edges) if self.side[u] != self.side[v]]


@dataclass(frozen=True)
class PFInstance:
    """A graph together with a set F of edge ids every feasible cut must contain."""

    graph: WeightedGraph
    fixed: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "fixed", frozenset(self.fixed))
        for f in self.fixed:
            if not 0 <= f < self.graph.m:
                raise GraphError(f"fixed edge id {f} does not exist")

    @property
    def fixed_pairs(self) -> list[tuple[int, int]]:
        return [self.graph.edges[f][:2] for f in sorted(self.fixed)]


def decimal_scale(weights: Iterable[object]) -> int:
    """Smallest power of ten that turns every weight into an integer."""
    scale = 0
    for w in weights:
        d = _as_decimal(w)
        exp = d.normalize().as_tuple().exponent
        if isinstance(exp, int) and exp < 0:
            scale = max(scale, -exp)
    return scale


def _as_decimal(w: object) -> Decimal:
    if isinstance(w, bool):
        raise GraphError(f"malformed weight {w!r}")
    if isinstance(w, int):
        return Decimal(w)
    if isinstance(w, float):
        w = repr(w)
    try:
        d = Decimal(str(w).strip())
    except InvalidOperation:
        raise GraphError(f"malformed weight {w!r}") from None
    if not d.is_finite():
        raise GraphError(f"malformed weight {w!r}")
    return d


def normalize_graph(
    n: int,
    edges: Iterable[tuple[int, int, object]],
    *,
    scale: int | None = None,
    names: Sequence[str] | None = None,
) -> WeightedGraph:
    """Ingest a raw edge list.

    Self-loops are dropped and parallel edges merged by summing weights.
    Weights may be ints, decimal strings or ``Decimal``; they are scaled by
    ``10**scale`` (inferred when ``scale`` is None). Surviving edges keep
    their first-occurrence order.
    """
    raw = list(edges)
    if scale is None:
        scale = decimal_scale(w for _, _, w in raw)
    factor = Decimal(10) ** scale
    merged: dict[tuple[int, int], int] = {}
    for u, v, w in raw:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"node id out of range in edge ({u}, {v})")
        d = _as_decimal(w) * factor
        if d != d.to_integral_value():
            raise GraphError(f"weight {w!r} needs more than {scale} decimal places")
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        merged[key] = merged.get(key, 0) + int(d)
    return WeightedGraph(
        n,
        tuple((u, v, w) for (u, v), w in merged.items()),
        scale,
        tuple(names) if names is not None else None,
    )


def _as_side(graph: WeightedGraph, S: Iterable[int] | Sequence[bool]) -> Sequence[bool]:
    if isinstance(S, tuple | list) and len(S) == graph.n and all(isinstance(s, bool) for s in S):
        return S
    side = [False] * graph.n
    for u in S:
        side[u] = True
    return side


def cut_value(graph: WeightedGraph, S: Iterable[int] | Sequence[bool]) -> int:
    """Total weight of edges with exactly one endpoint in S.

    ``S`` is either a node collection or a full per-node boolean vector.
    """
    side = _as_side(graph, S)
    return sum(w for u, v, w in graph.edges if side[u] != side[v])


def is_feasible_cut(inst: PFInstance, S: Iterable[int] | Sequence[bool]) -> bool:
    side = _as_side(inst.graph, S)
    return all(side[u] != side[v] for u, v in inst.fixed_pairs)


def pf_infeasible(inst: PFInstance) -> bool:
    """True iff the fixed edges contain an odd cycle (no feasible cut exists)."""
    n = inst.graph.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in inst.fixed_pairs:
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0 or not adj[s]:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return True
    return False
