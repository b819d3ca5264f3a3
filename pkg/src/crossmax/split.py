"""Crossing elimination by bisubdivision and node identification.

Node and edge numbering conventions (relied on by the solver and tests):

* ``bisubdivide`` keeps every node id, appends the two new nodes, keeps the
  split edge's id for the far segment (the one retaining the weight) and
  appends the two zero-weight fixed edges.
* ``identify`` keeps the smaller id for the merged node and closes the gap
  left by the larger one. Edge ids are unchanged.

A crossing split therefore yields a child with exactly three more nodes and
four more edges than its parent, with all parent node ids preserved.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from crossmax.crossings import CrossingConfiguration, NonGoodConfigurationError
from crossmax.graph import Cut, GraphError, PFInstance, WeightedGraph, is_feasible_cut

__all__ = [
    "SplitError",
    "InfeasibleCutError",
    "NodeMap",
    "Triplet",
    "bisubdivide",
    "identify",
    "crossing_split",
    "lift_cut",
]


class SplitError(ValueError):
    """An operation's precondition does not hold."""


class InfeasibleCutError(ValueError):
    """A cut to be lifted misses a fixed edge of its instance."""


@dataclass(frozen=True)
class NodeMap:
    """Correspondence between a parent instance's nodes and a child's.

    Every parent node survives in the child (possibly merged with another);
    child nodes without a parent are fresh. ``labels`` names the nodes an
    operation worked on, in child ids; ``edge_labels`` does the same for
    edges.
    """

    parent_to_child: tuple[int, ...]
    child_n: int
    labels: Mapping[str, int] = field(default_factory=dict)
    edge_labels: Mapping[str, int] = field(default_factory=dict)
    merged: int | None = None

    @property
    def child_to_parent(self) -> tuple[tuple[int, ...], ...]:
        pre: list[list[int]] = [[] for _ in range(self.child_n)]
        for p, c in enumerate(self.parent_to_child):
            pre[c].append(p)
        return tuple(tuple(x) for x in pre)

    @property
    def fresh(self) -> tuple[int, ...]:
        return tuple(c for c, pre in enumerate(self.child_to_parent) if not pre)

    def then(self, nxt: NodeMap) -> NodeMap:
        """Composite map: apply ``self`` first, then ``nxt``."""
        labels = {k: nxt.parent_to_child[c] for k, c in self.labels.items()}
        labels.update(nxt.labels)
        merged = nxt.merged
        if merged is None and self.merged is not None:
            merged = nxt.parent_to_child[self.merged]
        return NodeMap(
            tuple(nxt.parent_to_child[c] for c in self.parent_to_child),
            nxt.child_n,
            labels,
            {**self.edge_labels, **nxt.edge_labels},
            merged,
        )

    def lift(self, side: Sequence[bool]) -> tuple[bool, ...]:
        return tuple(side[c] for c in self.parent_to_child)


@dataclass(frozen=True)
class Triplet:
    """A PF-MAX-CUT instance, its crossing configuration, and how it was made."""

    instance: PFInstance
    config: CrossingConfiguration
    lineage: NodeMap | None = None

    @property
    def graph(self) -> WeightedGraph:
        return self.instance.graph

    @classmethod
    def root(cls, graph: WeightedGraph, config: CrossingConfiguration) -> Triplet:
        return cls(PFInstance(graph), config)


def bisubdivide(inst: PFInstance, edge: int, at: int) -> tuple[PFInstance, NodeMap]:
    """Replace edge vw (v = ``at``) by the path v - v_bar - w_bar - w.

    The first two edges get weight 0 and join F; the last keeps the weight
    and the edge id (so membership of vw in F carries over to it).
    """
    g = inst.graph
    if not 0 <= edge < g.m:
        raise SplitError(f"edge {edge} does not exist")
    a, b, weight = g.edges[edge]
    if at not in (a, b):
        raise SplitError(f"node {at} is not an endpoint of edge {edge}")
    v, w = at, (b if at == a else a)
    vb, wb = g.n, g.n + 1
    edges = list(g.edges)
    edges[edge] = (min(w, wb), max(w, wb), weight)
    edges.append((v, vb, 0))
    edges.append((vb, wb, 0))
    child = PFInstance(
        WeightedGraph(g.n + 2, tuple(edges), g.scale),
        inst.fixed | {g.m, g.m + 1},
    )
    nmap = NodeMap(
        tuple(range(g.n)),
        g.n + 2,
        {"v": v, "w": w, "v_bar": vb, "w_bar": wb},
        {"near": g.m, "middle": g.m + 1, "far": edge},
    )
    return child, nmap


def identify(inst: PFInstance, a: int, b: int) -> tuple[PFInstance, NodeMap]:
    """Merge two nodes that are neither adjacent nor share a neighbor."""
    g = inst.graph
    if a == b or not (0 <= a < g.n and 0 <= b < g.n):
        raise SplitError(f"cannot identify {a} with {b}")
    na, nb = set(g.neighbors(a)), set(g.neighbors(b))
    if b in na:
        raise SplitError(f"nodes {a} and {b} are adjacent")
    if na & nb:
        raise SplitError(f"nodes {a} and {b} share neighbors {sorted(na & nb)}")
    keep, drop = min(a, b), max(a, b)
    p2c = tuple(keep if u == drop else (u - 1 if u > drop else u) for u in range(g.n))
    try:
        graph = WeightedGraph.from_edges(
            g.n - 1, ((p2c[u], p2c[v], w) for u, v, w in g.edges), scale=g.scale
        )
    except GraphError as exc:  # pragma: no cover - excluded by the checks above
        raise SplitError(str(exc)) from exc
    return PFInstance(graph, inst.fixed), NodeMap(p2c, g.n - 1, {"merged": keep}, {}, keep)


def _oriented(seq: Sequence[int], start: int, edge: tuple[int, int, int]) -> tuple[int, ...]:
    """``seq`` runs from ``start``; return it from the edge's lower endpoint."""
    return tuple(seq) if start == edge[0] else tuple(reversed(seq))


def _towards(order: Sequence[int], chi: int, j: int, lower: int) -> tuple[int, ...]:
    """Crossings strictly between endpoint ``j`` and crossing ``chi``, from ``j``."""
    i = order.index(chi)
    if j == lower:
        return tuple(order[:i])
    return tuple(reversed(order[i + 1 :]))


def crossing_split(
    triplet: Triplet,
    chi: int,
    roles: tuple[int, int, int, int] | None = None,
) -> tuple[Triplet, Triplet]:
    """Eliminate crossing ``chi`` of edges vw and xy; return (T_v, T_w).

    In T_v the fixed path v - v_bar - x forces v and x to the same side; in
    T_w the path v - v_bar - w_bar - x forces opposite sides. ``roles``
    optionally fixes ``(v, w, x, y)``; by default vw is the crossing's
    smaller edge id and each edge is anchored at its lower endpoint.
    """
    inst, config = triplet.instance, triplet.config
    g = inst.graph
    if chi not in config.crossings:
        raise SplitError(f"crossing {chi} does not exist")
    e1, e2 = config.crossings[chi]
    if roles is None:
        v, w = g.edges[e1][:2]
        x, y = g.edges[e2][:2]
        e_vw, e_xy = e1, e2
    else:
        v, w, x, y = roles
        e_vw, e_xy = g.edge_index.get((min(v, w), max(v, w))), g.edge_index.get((min(x, y), max(x, y)))
        if {e_vw, e_xy} != {e1, e2}:
            raise SplitError(f"roles {roles} do not match the edges of crossing {chi}")
    if {v, w} & {x, y}:
        raise NonGoodConfigurationError(f"crossing {chi} joins adjacent edges {e_vw} and {e_xy}")

    mid1, map1 = bisubdivide(inst, e_vw, v)
    mid2, map2 = bisubdivide(mid1, e_xy, x)
    pre = map1.then(map2)
    near_v, near_x = map1.edge_labels["near"], map2.edge_labels["near"]
    vb, wb = map1.labels["v_bar"], map1.labels["w_bar"]
    xb, yb = map2.labels["v_bar"], map2.labels["w_bar"]

    Y = {
        "v": _towards(config.order[e_vw], chi, v, g.edges[e_vw][0]),
        "w": _towards(config.order[e_vw], chi, w, g.edges[e_vw][0]),
        "x": _towards(config.order[e_xy], chi, x, g.edges[e_xy][0]),
        "y": _towards(config.order[e_xy], chi, y, g.edges[e_xy][0]),
    }
    # crossing id -> (old edge, new edge) for crossings moving onto a near segment
    moved = {c: (e_vw, near_v) for c in Y["v"]}
    moved.update({c: (e_xy, near_x) for c in Y["x"]})
    crossings = {}
    for c, (e, f) in config.crossings.items():
        if c == chi:
            continue
        if c in moved:
            old, new = moved[c]
            e, f = (new if e == old else e), (new if f == old else f)
        crossings[c] = (e, f)
    # each entry: child edge id -> (sequence, parent node the sequence starts from)
    runs: dict[int, tuple[Sequence[int], int]] = {
        e: (seq, g.edges[e][0]) for e, seq in config.order.items() if e not in (e_vw, e_xy)
    }
    runs[near_v] = (Y["v"], v)
    runs[e_vw] = (Y["w"], w)
    runs[near_x] = (Y["x"], x)
    runs[e_xy] = (Y["y"], y)

    children = []
    for side, target in (("v", vb), ("w", wb)):
        child, map3 = identify(mid2, xb, target)
        lineage = pre.then(map3)
        p2c = lineage.parent_to_child
        order = {
            e: _oriented(seq, p2c[start], child.graph.edges[e])
            for e, (seq, start) in runs.items()
            if seq
        }
        labels = {
            "v": p2c[v], "w": p2c[w], "x": p2c[x], "y": p2c[y],
            "v_bar": map3.parent_to_child[vb], "w_bar": map3.parent_to_child[wb],
            "x_bar": map3.parent_to_child[xb], "y_bar": map3.parent_to_child[yb],
        }  # fmt: skip
        lineage = NodeMap(p2c, lineage.child_n, labels, lineage.edge_labels, lineage.merged)
        children.append(Triplet(child, CrossingConfiguration(crossings, order), lineage))
    return children[0], children[1]


def lift_cut(
    child_cut: Cut,
    lineage: NodeMap | Sequence[NodeMap],
    instance: PFInstance | None = None,
) -> Cut:
    """Map a cut of a derived instance back to the original one.

    ``lineage`` is a single map or a chain ordered from the ancestor to the
    child. When ``instance`` (the child instance) is given, the cut is first
    checked to contain all of its fixed edges. The value carries over
    unchanged, as fixed edges weigh nothing.
    """
    if instance is not None and not is_feasible_cut(instance, child_cut.side):
        raise InfeasibleCutError("cut misses a fixed edge of the child instance")
    chain = [lineage] if isinstance(lineage, NodeMap) else list(lineage)
    side = child_cut.side
    for nmap in reversed(chain):
        side = nmap.lift(side)
    return Cut(side, child_cut.value)
