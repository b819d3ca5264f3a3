"""MAX-CUT through a low-degree realization of the input graph.

A realization replaces each node of G by a tree of *split edges* in a graph
H of small maximum degree; contracting the split edges gives G back. Split
edges get a weight so negative that no maximum cut of H uses one, and the
cuts of H avoiding them are exactly the cuts of G.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from crossmax.crossings import CrossingConfiguration
from crossmax.graph import Cut, WeightedGraph, cut_value
from crossmax.result import SolveResult, SolveStats
from crossmax.solver import Strategy, solve

__all__ = [
    "Realization",
    "SplitPenalty",
    "InvalidRealizationError",
    "SplitEdgeCutError",
    "realization_problems",
    "validate_realization",
    "split_node",
    "solve_via_realization",
]


class InvalidRealizationError(ValueError):
    """Contracting the split edges does not give back the input graph."""


class SplitEdgeCutError(RuntimeError):
    """The optimal cut of the penalized graph contains a split edge."""


@dataclass(frozen=True)
class Realization:
    """Graph ``H`` whose split edges contract onto G.

    ``contract[h]`` is the G-node that H-node ``h`` belongs to. Weights of
    split edges in ``H`` are ignored; every other edge of ``H`` stands for
    the G-edge between the images of its endpoints and carries its weight.
    """

    H: WeightedGraph
    split_edges: frozenset[int]
    contract: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "split_edges", frozenset(self.split_edges))
        object.__setattr__(self, "contract", tuple(self.contract))

    @classmethod
    def trivial(cls, graph: WeightedGraph) -> Realization:
        return cls(graph, frozenset(), tuple(range(graph.n)))

    def nodes_of(self, g: int) -> list[int]:
        return [h for h, x in enumerate(self.contract) if x == g]


@dataclass(frozen=True)
class SplitPenalty:
    """Weight put on every split edge: ``N = -3 * sum |c_e|`` over G."""

    N: int

    @classmethod
    def of(cls, graph: WeightedGraph) -> SplitPenalty:
        return cls(-3 * graph.total_abs_weight())


def realization_problems(
    graph: WeightedGraph, real: Realization, max_degree: int | None = 3
) -> list[str]:
    """Reasons ``real`` fails to realize ``graph``; empty if it is valid."""
    H = real.H
    out: list[str] = []
    if len(real.contract) != H.n:
        return [f"contraction map has {len(real.contract)} entries for {H.n} nodes"]
    if H.scale != graph.scale:
        out.append(f"weight scales differ ({H.scale} vs {graph.scale})")
    bad = [h for h, g in enumerate(real.contract) if not 0 <= g < graph.n]
    if bad:
        return out + [f"nodes {bad} map outside the graph"]
    missing = sorted(set(range(graph.n)) - set(real.contract))
    if missing:
        out.append(f"graph nodes {missing} have no preimage")
    unknown = sorted(e for e in real.split_edges if not 0 <= e < H.m)
    if unknown:
        return out + [f"split edges {unknown} do not exist"]

    parent = list(range(H.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    count = [0] * graph.n
    for e in sorted(real.split_edges):
        a, b, _ = H.edges[e]
        if real.contract[a] != real.contract[b]:
            out.append(f"split edge {e} joins nodes of different graph nodes")
            continue
        count[real.contract[a]] += 1
        if find(a) == find(b):
            out.append(f"split edges of graph node {real.contract[a]} contain a cycle")
        parent[find(a)] = find(b)
    for g in range(graph.n):
        roots = {find(h) for h in real.nodes_of(g)}
        if len(roots) > 1:
            out.append(f"split edges of graph node {g} do not connect its {len(real.nodes_of(g))} nodes")

    seen: dict[tuple[int, int], int] = {}
    for e, (a, b, w) in enumerate(H.edges):
        if e in real.split_edges:
            continue
        ga, gb = real.contract[a], real.contract[b]
        if ga == gb:
            out.append(f"edge {e} would become a loop at graph node {ga}")
            continue
        key = (min(ga, gb), max(ga, gb))
        if key in seen:
            out.append(f"edges {seen[key]} and {e} would become parallel")
            continue
        seen[key] = e
        if key not in graph.edge_index:
            out.append(f"edge {e} maps to {key}, which is not an edge of the graph")
        elif graph.edges[graph.edge_index[key]][2] != w:
            out.append(f"edge {e} weighs {w}, graph edge {key} weighs {graph.edges[graph.edge_index[key]][2]}")
    absent = sorted(set(graph.edge_index) - set(seen))
    if absent:
        out.append(f"graph edges {absent} are not realized")
    if max_degree is not None:
        high = [h for h in range(H.n) if H.degree(h) > max_degree]
        if high:
            out.append(f"nodes {high} exceed degree {max_degree}")
    return out


def validate_realization(graph: WeightedGraph, real: Realization, max_degree: int | None = 3) -> bool:
    return not realization_problems(graph, real, max_degree)


def split_node(real: Realization, h: int, moved: Iterable[int]) -> Realization:
    """Move the edges from ``h`` to the neighbors ``moved`` onto a new node.

    The new node gets id ``H.n``, belongs to the same graph node as ``h``
    and is joined to it by a new split edge (the last edge id). Moved edges
    keep their ids and weights.
    """
    H = real.H
    moved = set(moved)
    nbrs = set(H.neighbors(h))
    if not moved <= nbrs:
        raise ValueError(f"nodes {sorted(moved - nbrs)} are not neighbors of {h}")
    new = H.n
    edges = [
        (new, v, w) if u == h and v in moved else (u, new, w) if v == h and u in moved else (u, v, w)
        for u, v, w in H.edges
    ]
    edges.append((h, new, 0))
    H2 = WeightedGraph.from_edges(H.n + 1, edges, scale=H.scale)
    return Realization(H2, real.split_edges | {H2.m - 1}, real.contract + (real.contract[h],))


def solve_via_realization(
    graph: WeightedGraph,
    real: Realization,
    config: CrossingConfiguration | None = None,
    *,
    strategy: str | Strategy = "lowest",
    parallel: int = 0,
    max_degree: int | None = 3,
) -> SolveResult:
    """Maximum cut of ``graph`` computed on the realization ``real``.

    ``config`` is a crossing configuration of ``real.H``. Pass
    ``max_degree=None`` to accept realizations of any degree.
    """
    problems = realization_problems(graph, real, max_degree)
    if problems:
        raise InvalidRealizationError("; ".join(problems))
    if graph.total_abs_weight() == 0:
        # no penalty can be built from zero weights, and every cut is worth 0
        return SolveResult(0, Cut((False,) * graph.n, 0), SolveStats())
    N = SplitPenalty.of(graph).N
    H = real.H
    penalized = H.with_weights([N if e in real.split_edges else w for e, (_, _, w) in enumerate(H.edges)])
    res = solve(penalized, config, strategy=strategy, parallel=parallel)
    side_h = res.witness.side
    cut_split = sorted(e for e in real.split_edges if side_h[H.edges[e][0]] != side_h[H.edges[e][1]])
    if cut_split:  # pragma: no cover - excluded by the size of N
        raise SplitEdgeCutError(f"split edges {cut_split} lie in the optimal cut")
    side = [False] * graph.n
    for h, g in enumerate(real.contract):
        side[g] = side_h[h]
    value = cut_value(graph, side)
    if value != res.value:  # pragma: no cover - would mean a broken reduction
        raise RuntimeError(f"realization value {res.value} differs from graph value {value}")
    return SolveResult(value, Cut(tuple(side), value).normalized(), res.stats)
