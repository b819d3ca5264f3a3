"""Crossing configurations: storage, planarization and feasibility.

A configuration names, for every crossing, the two edges involved, and for
every crossed edge the order of its crossings walking from its lower-id
endpoint to its higher-id endpoint.

Feasibility asks for a planar embedding of the planarization (crossings
replaced by degree-4 dummy nodes) in which every dummy alternates between
its two edges. The test is exact: each dummy is made the hub of a wheel
whose rim lists its four segments in alternating order. A wheel is
3-connected, so its rotation is fixed up to mirroring, and one planarity
test of the augmented graph decides the question.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import networkx as nx

from crossmax.graph import WeightedGraph
from crossmax.planar.embedding import RotationSystem

__all__ = [
    "ConfigurationError",
    "InfeasibleConfigurationError",
    "NonGoodConfigurationError",
    "CrossingConfiguration",
    "Planarization",
    "Status",
    "Validation",
    "planarize",
    "validate",
    "reduce_touches",
    "is_good",
    "good_violations",
]


class ConfigurationError(ValueError):
    """Crossing configuration is structurally inconsistent."""


class InfeasibleConfigurationError(ValueError):
    """No drawing realizes the configuration."""


class NonGoodConfigurationError(ValueError):
    """Adjacent edges cross, or an edge pair crosses more than once."""


@dataclass(frozen=True)
class CrossingConfiguration:
    """Crossings keyed by id, plus the crossing order along each crossed edge.

    ``crossings[c] = (e, f)`` with ``e < f``; ``order[e]`` lists the ids of
    crossings on edge ``e`` from its lower endpoint to its higher endpoint.
    Use :meth:`build` to have single-crossing orders filled in.
    """

    crossings: Mapping[int, tuple[int, int]] = field(default_factory=dict)
    order: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cr = {}
        for c, (e, f) in sorted(self.crossings.items()):
            if e == f:
                raise ConfigurationError(f"crossing {c} names edge {e} twice")
            cr[int(c)] = (min(e, f), max(e, f))
        order = {int(e): tuple(seq) for e, seq in sorted(self.order.items())}
        on_edge: dict[int, set[int]] = {}
        for c, (e, f) in cr.items():
            on_edge.setdefault(e, set()).add(c)
            on_edge.setdefault(f, set()).add(c)
        if set(order) != set(on_edge):
            extra = sorted(set(order) ^ set(on_edge))
            raise ConfigurationError(f"order sequences do not match crossed edges: {extra}")
        for e, seq in order.items():
            if len(set(seq)) != len(seq):
                raise ConfigurationError(f"order of edge {e} repeats a crossing")
            if set(seq) != on_edge[e]:
                raise ConfigurationError(f"order of edge {e} does not list exactly its crossings")
        object.__setattr__(self, "crossings", cr)
        object.__setattr__(self, "order", order)

    @classmethod
    def build(
        cls,
        crossings: Mapping[int, tuple[int, int]] | Iterable[tuple[int, int]],
        order: Mapping[int, Sequence[int]] | None = None,
    ) -> CrossingConfiguration:
        """Create a configuration, inferring the order of singly-crossed edges.

        ``crossings`` may be a mapping id -> edge pair or a plain sequence of
        edge pairs (ids 0, 1, ...).
        """
        if not isinstance(crossings, Mapping):
            crossings = dict(enumerate(crossings))
        order = {e: tuple(s) for e, s in (order or {}).items()}
        on_edge: dict[int, list[int]] = {}
        for c, (e, f) in sorted(crossings.items()):
            on_edge.setdefault(e, []).append(c)
            on_edge.setdefault(f, []).append(c)
        for e, cs in on_edge.items():
            if e not in order:
                if len(cs) > 1:
                    raise ConfigurationError(f"edge {e} has {len(cs)} crossings but no order")
                order[e] = tuple(cs)
        return cls(crossings, order)

    @property
    def k(self) -> int:
        return len(self.crossings)

    @property
    def ids(self) -> list[int]:
        return sorted(self.crossings)

    def __len__(self) -> int:
        return len(self.crossings)

    def __bool__(self) -> bool:
        return bool(self.crossings)

    def without(self, removed: Iterable[int]) -> CrossingConfiguration:
        gone = set(removed)
        cr = {c: p for c, p in self.crossings.items() if c not in gone}
        order = {e: tuple(c for c in seq if c not in gone) for e, seq in self.order.items()}
        return CrossingConfiguration(cr, {e: s for e, s in order.items() if s})

    def check_against(self, graph: WeightedGraph) -> None:
        for c, (e, f) in self.crossings.items():
            for x in (e, f):
                if not 0 <= x < graph.m:
                    raise ConfigurationError(f"crossing {c} references nonexistent edge {x}")

    def other_edge(self, c: int, e: int) -> int:
        a, b = self.crossings[c]
        return b if a == e else a


@dataclass(frozen=True)
class Planarization:
    """The drawing's skeleton: crossings become dummy nodes of degree 4.

    Dummy ``i`` is node ``n_original + i`` and stands for crossing
    ``dummy_crossing[i]``. Skeleton edge ``s`` joins ``ends[s]`` and is
    segment ``origin[s] = (edge, index)`` of an original edge, counted from
    the edge's lower endpoint. Segments keep their edge's weight.
    """

    n_original: int
    n: int
    ends: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]
    origin: tuple[tuple[int, int], ...]
    dummy_crossing: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.ends)

    def dummy(self, c: int) -> int:
        return self.n_original + self.dummy_crossing.index(c)

    def is_simple(self) -> bool:
        keys = [(min(a, b), max(a, b)) for a, b in self.ends]
        return len(set(keys)) == len(keys)

    def as_graph(self) -> WeightedGraph:
        """The skeleton as a simple graph (edge ids are renumbered)."""
        if not self.is_simple():
            raise ConfigurationError("planarization has parallel segments")
        return WeightedGraph.from_edges(self.n, [(a, b, w) for (a, b), w in zip(self.ends, self.weights)])

    def contract(self) -> tuple[WeightedGraph, CrossingConfiguration]:
        """Undo the planarization: reconnect segments through every dummy."""
        segs: dict[int, list[tuple[int, int]]] = {}
        for s, (e, i) in enumerate(self.origin):
            segs.setdefault(e, []).append((i, s))
        edges = []
        order: dict[int, tuple[int, ...]] = {}
        crossing_edges: dict[int, list[int]] = {}
        for e in sorted(segs):
            chain = [s for _, s in sorted(segs[e])]
            ends = [x for s in chain for x in self.ends[s] if x < self.n_original]
            u, v = min(ends), max(ends)
            edges.append((u, v, self.weights[chain[0]]))
            # walk from u through the dummies
            cur, seq = u, []
            for s in chain:
                a, b = self.ends[s]
                nxt = b if a == cur else a
                if nxt >= self.n_original:
                    c = self.dummy_crossing[nxt - self.n_original]
                    seq.append(c)
                    crossing_edges.setdefault(c, []).append(len(edges) - 1)
                cur = nxt
            if seq:
                order[len(edges) - 1] = tuple(seq)
        graph = WeightedGraph.from_edges(self.n_original, edges)
        return graph, CrossingConfiguration(
            {c: tuple(es) for c, es in crossing_edges.items()}, order
        )


def planarize(graph: WeightedGraph, config: CrossingConfiguration) -> Planarization:
    config.check_against(graph)
    dummies = config.ids
    node_of = {c: graph.n + i for i, c in enumerate(dummies)}
    ends, weights, origin = [], [], []
    for e, (u, v, w) in enumerate(graph.edges):
        path = [u, *(node_of[c] for c in config.order.get(e, ())), v]
        for i in range(len(path) - 1):
            ends.append((path[i], path[i + 1]))
            weights.append(w)
            origin.append((e, i))
    return Planarization(
        graph.n, graph.n + len(dummies), tuple(ends), tuple(weights), tuple(origin), tuple(dummies)
    )


class Status(enum.Enum):
    FEASIBLE = "feasible"
    REDUCED = "reduced"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Validation:
    """Outcome of :func:`validate`.

    ``config`` is the input for FEASIBLE/INFEASIBLE and the reduced
    configuration for REDUCED. ``embedding`` is a rotation system of the
    planarization (edge ids = segment ids) in which every dummy alternates;
    it is only present for FEASIBLE.
    """

    status: Status
    config: CrossingConfiguration
    removed: tuple[int, ...] = ()
    embedding: RotationSystem | None = None
    planarization: Planarization | None = None

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE


def _augmented(p: Planarization, rigid: Iterable[int]) -> tuple[nx.Graph, list[dict[int, int]]]:
    """Skeleton as a simple nx graph with wheels around the ``rigid`` dummies.

    Returns the graph and, per skeleton node, a map from aux neighbor to
    skeleton edge id.
    """
    rigid = set(rigid)
    g = nx.Graph()
    g.add_nodes_from(range(p.n))
    fresh = p.n
    back: list[dict[int, int]] = [{} for _ in range(p.n)]
    rim: dict[int, dict[int, int]] = {d: {} for d in rigid}  # dummy -> segment -> rim node
    seen: set[tuple[int, int]] = set()
    for s, (a, b) in enumerate(p.ends):
        path = [a]
        if a in rigid:
            rim[a][s] = fresh
            path.append(fresh)
            fresh += 1
        if b in rigid:
            rim[b][s] = fresh
            path.append(fresh)
            fresh += 1
        key = (min(a, b), max(a, b))
        if len(path) == 1 and key in seen:
            path.append(fresh)
            fresh += 1
        seen.add(key)
        path.append(b)
        nx.add_path(g, path)
        back[a][path[1]] = s
        back[b][path[-2]] = s
    for d, by_seg in rim.items():
        # segments at d in alternating order: first edge's, second's, first's, second's
        segs = sorted(by_seg, key=lambda s: (p.origin[s][0], p.origin[s][1]))
        e1 = [s for s in segs if p.origin[s][0] == p.origin[segs[0]][0]]
        e2 = [s for s in segs if p.origin[s][0] != p.origin[segs[0]][0]]
        cyc = [by_seg[e1[0]], by_seg[e2[0]], by_seg[e1[1]], by_seg[e2[1]]]
        nx.add_cycle(g, cyc)
    return g, back


def _rotation(p: Planarization, g: nx.Graph, back: list[dict[int, int]]) -> RotationSystem:
    _, emb = nx.check_planarity(g)
    rotation = tuple(
        tuple(back[u][x] for x in emb.neighbors_cw_order(u)) if back[u] else ()
        for u in range(p.n)
    )
    return RotationSystem(p.n, p.ends, rotation)


def _planar(g: nx.Graph) -> bool:
    return nx.check_planarity(g)[0]


def validate(graph: WeightedGraph, config: CrossingConfiguration) -> Validation:
    """Decide feasibility; report touches (non-alternating dummies) for removal.

    FEASIBLE: some planar embedding alternates at every dummy.
    REDUCED: the planarization is planar, but the listed crossings have to
    be touches; ``config`` is the configuration without them.
    INFEASIBLE: the planarization is not planar.
    """
    p = planarize(graph, config)
    dummies = list(range(graph.n, p.n))
    g, back = _augmented(p, dummies)
    if _planar(g):
        return Validation(Status.FEASIBLE, config, (), _rotation(p, g, back), p)
    if not _planar(_augmented(p, ())[0]):
        return Validation(Status.INFEASIBLE, config, planarization=p)
    # keep as many proper crossings as possible, lowest crossing id first
    rigid: list[int] = []
    touches: list[int] = []
    for d in dummies:
        if _planar(_augmented(p, [*rigid, d])[0]):
            rigid.append(d)
        else:
            touches.append(p.dummy_crossing[d - graph.n])
    return Validation(Status.REDUCED, config.without(touches), tuple(touches), planarization=p)


def reduce_touches(
    graph: WeightedGraph, config: CrossingConfiguration
) -> tuple[CrossingConfiguration, tuple[int, ...]]:
    """Apply touch removals until the configuration is feasible.

    Returns the feasible configuration and every removed crossing id.
    Raises InfeasibleConfigurationError if the planarization is not planar.
    """
    removed: list[int] = []
    while True:
        res = validate(graph, config)
        if res.status is Status.INFEASIBLE:
            raise InfeasibleConfigurationError("planarization of the configuration is not planar")
        if res.status is Status.FEASIBLE:
            return config, tuple(removed)
        removed.extend(res.removed)
        config = res.config


def good_violations(graph: WeightedGraph, config: CrossingConfiguration) -> list[str]:
    """Human-readable reasons why the configuration is not good (empty if good)."""
    config.check_against(graph)
    out = []
    pairs: dict[tuple[int, int], int] = {}
    for c, (e, f) in config.crossings.items():
        if set(graph.edges[e][:2]) & set(graph.edges[f][:2]):
            out.append(f"crossing {c}: adjacent edges {e} and {f} cross")
        if (e, f) in pairs:
            out.append(f"crossing {c}: edges {e} and {f} already cross at {pairs[(e, f)]}")
        pairs.setdefault((e, f), c)
    return out


def is_good(graph: WeightedGraph, config: CrossingConfiguration) -> bool:
    return not good_violations(graph, config)
