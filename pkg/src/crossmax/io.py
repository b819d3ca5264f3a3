"""Line-oriented instance files.

::

    # K4 drawn with one crossing
    nodes 4
    name 0 a
    edge 0 0 1 1
    edge 1 0 2 2.5
    ...
    crossing 0 1 4
    order 1 0

``order`` lists the crossings of an edge from its lower to its higher
endpoint and may be left out for edges crossed once. An optional
realization block describes a graph H whose ``split`` edges contract onto
the main graph (``contract <H-node> <node>`` for every H-node)::

    realize nodes 6
    realize edge 0 0 1 1
    realize crossing 0 2 5
    realize order 2 0
    split 6
    contract 4 0

Edge ids must be distinct; after loops are dropped and parallel edges
merged (the merged edge keeps the smallest id), surviving edges are
renumbered in id order.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from decimal import Decimal

from crossmax.crossings import ConfigurationError, CrossingConfiguration
from crossmax.graph import GraphError, WeightedGraph, decimal_scale, normalize_graph
from crossmax.mcr import Realization

__all__ = ["ParseError", "Instance", "parse_instance", "serialize", "format_weight", "read_instance"]


class ParseError(ValueError):
    """Malformed instance text; ``line`` is 1-based, or None if global."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass(frozen=True)
class Instance:
    graph: WeightedGraph
    config: CrossingConfiguration
    realization: Realization | None = None
    realization_config: CrossingConfiguration | None = None


def format_weight(w: int, scale: int) -> str:
    """Exact decimal text of the scaled integer ``w``."""
    d = Decimal(w).scaleb(-scale).normalize()
    return f"{d:f}"


class _Section:
    """Raw declarations for one graph (the main one or the realization)."""

    def __init__(self, label: str):
        self.label = label
        self.nodes: tuple[int, int] | None = None  # (count, line)
        self.edges: dict[int, tuple[int, int, str, int]] = {}  # id -> (u, v, weight, line)
        self.crossings: dict[int, tuple[int, int, int]] = {}  # id -> (e, f, line)
        self.orders: dict[int, tuple[list[int], int]] = {}  # edge -> (crossings, line)

    def add_edge(self, args: list[str], line: int) -> None:
        eid, u, v = (_int(a, line) for a in args[:3])
        if eid in self.edges:
            raise ParseError(f"{self.label}edge {eid} declared twice", line)
        self.edges[eid] = (u, v, args[3], line)

    def add_crossing(self, args: list[str], line: int) -> None:
        cid, e, f = (_int(a, line) for a in args)
        if cid in self.crossings:
            raise ParseError(f"{self.label}crossing {cid} declared twice", line)
        self.crossings[cid] = (e, f, line)

    def add_order(self, args: list[str], line: int) -> None:
        e = _int(args[0], line)
        if e in self.orders:
            raise ParseError(f"{self.label}order for edge {e} declared twice", line)
        self.orders[e] = ([_int(a, line) for a in args[1:]], line)

    def build(self, scale: int) -> tuple[WeightedGraph, CrossingConfiguration, dict[int, int]]:
        """Graph, configuration and file-id -> edge-id map."""
        if self.nodes is None:
            raise ParseError(f"missing '{self.label}nodes' line")
        n, _ = self.nodes
        for eid, (u, v, _, line) in self.edges.items():
            if eid < 0:
                raise ParseError(f"negative edge id {eid}", line)
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(f"node {x} out of range 0..{n - 1}", line)
        # first occurrence in id order survives a merge
        kept: dict[tuple[int, int], int] = {}
        for eid in sorted(self.edges):
            u, v, _, _ = self.edges[eid]
            if u != v:
                kept.setdefault((min(u, v), max(u, v)), eid)
        surviving = sorted(kept.values())
        remap = {eid: i for i, eid in enumerate(surviving)}
        raw = [(self.edges[eid][0], self.edges[eid][1], self.edges[eid][2]) for eid in sorted(self.edges)]
        try:
            graph = normalize_graph(n, raw, scale=scale)
        except GraphError as exc:
            raise ParseError(str(exc)) from None
        # normalize_graph keeps first-occurrence order, which is id order here
        assert graph.m == len(surviving)

        def edge_ref(e: int, line: int) -> int:
            if e not in self.edges:
                raise ParseError(f"{self.label}edge {e} is not declared", line)
            if e not in remap:
                raise ParseError(f"edge {e} is a loop or a duplicate and cannot be referenced", line)
            return remap[e]

        crossings = {}
        for cid, (e, f, line) in self.crossings.items():
            if cid < 0:
                raise ParseError(f"negative crossing id {cid}", line)
            crossings[cid] = (edge_ref(e, line), edge_ref(f, line))
        order = {}
        for e, (seq, line) in self.orders.items():
            for c in seq:
                if c not in self.crossings:
                    raise ParseError(f"{self.label}crossing {c} is not declared", line)
            order[edge_ref(e, line)] = seq
        try:
            config = CrossingConfiguration.build(crossings, order)
        except ConfigurationError as exc:
            raise ParseError(str(exc)) from None
        return graph, config, remap


def _int(text: str, line: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", line) from None


def parse_instance(text: str) -> Instance:
    main, real = _Section(""), _Section("realize ")
    names: dict[int, tuple[str, int]] = {}
    splits: dict[int, int] = {}
    contract: dict[int, tuple[int, int]] = {}

    def need(args: list[str], count: int, line: int, what: str, at_least: bool = False) -> None:
        if len(args) < count or (not at_least and len(args) != count):
            raise ParseError(f"'{what}' takes {'at least ' if at_least else ''}{count} arguments", line)

    def nodes(section: _Section) -> Callable[[list[str], int], None]:
        def handler(args: list[str], line: int) -> None:
            if section.nodes is not None:
                raise ParseError(f"'{section.label}nodes' declared twice", line)
            count = _int(args[0], line)
            if count < 0:
                raise ParseError("node count must be non-negative", line)
            section.nodes = (count, line)

        return handler

    def name(args: list[str], line: int) -> None:
        u = _int(args[0], line)
        if u in names:
            raise ParseError(f"node {u} named twice", line)
        names[u] = (args[1], line)

    def split(args: list[str], line: int) -> None:
        e = _int(args[0], line)
        if e in splits:
            raise ParseError(f"split edge {e} declared twice", line)
        splits[e] = line

    def contract_line(args: list[str], line: int) -> None:
        h, g = _int(args[0], line), _int(args[1], line)
        if h in contract:
            raise ParseError(f"contraction of node {h} declared twice", line)
        contract[h] = (g, line)

    handlers = {
        "nodes": (1, False, nodes(main)),
        "name": (2, False, name),
        "edge": (4, False, main.add_edge),
        "crossing": (3, False, main.add_crossing),
        "order": (2, True, main.add_order),
        "realize nodes": (1, False, nodes(real)),
        "realize edge": (4, False, real.add_edge),
        "realize crossing": (3, False, real.add_crossing),
        "realize order": (2, True, real.add_order),
        "split": (1, False, split),
        "contract": (2, False, contract_line),
    }
    realized = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        key, args = words[0], words[1:]
        if key == "realize":
            if not args:
                raise ParseError("'realize' needs a directive", lineno)
            key, args = f"realize {args[0]}", args[1:]
        if key not in handlers:
            raise ParseError(f"unknown directive {key!r}", lineno)
        count, at_least, handler = handlers[key]
        need(args, count, lineno, key, at_least)
        realized = realized or key.startswith("realize") or key in ("split", "contract")
        handler(args, lineno)

    try:
        scale = decimal_scale(w for s in (main, real) for _, _, w, _ in s.edges.values())
    except GraphError as exc:
        bad = next(
            line for s in (main, real) for _, _, w, line in s.edges.values()
            if _bad_weight(w)
        )  # fmt: skip
        raise ParseError(str(exc), bad) from None
    graph, config, _ = main.build(scale)
    if names:
        for u, (_, line) in names.items():
            if not 0 <= u < graph.n:
                raise ParseError(f"node {u} out of range 0..{graph.n - 1}", line)
        graph = WeightedGraph(graph.n, graph.edges, graph.scale, tuple(
            names[u][0] if u in names else str(u) for u in range(graph.n)
        ))  # fmt: skip
    if not realized:
        return Instance(graph, config)

    H, config_h, remap = real.build(scale)
    split_ids = set()
    for e, line in splits.items():
        if e not in real.edges:
            raise ParseError(f"split edge {e} is not a declared realize edge", line)
        if e not in remap:
            raise ParseError(f"split edge {e} is a loop or a duplicate", line)
        split_ids.add(remap[e])
    for h, (g, line) in contract.items():
        if not 0 <= h < H.n:
            raise ParseError(f"realization node {h} out of range 0..{H.n - 1}", line)
        if not 0 <= g < graph.n:
            raise ParseError(f"node {g} out of range 0..{graph.n - 1}", line)
    missing = [h for h in range(H.n) if h not in contract]
    if missing:
        raise ParseError(f"realization nodes {missing} have no 'contract' line")
    realization = Realization(H, frozenset(split_ids), tuple(contract[h][0] for h in range(H.n)))
    return Instance(graph, config, realization, config_h)


def _bad_weight(w: str) -> bool:
    try:
        decimal_scale([w])
    except GraphError:
        return True
    return False


def read_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _graph_lines(prefix: str, graph: WeightedGraph, config: CrossingConfiguration) -> list[str]:
    out = [f"{prefix}nodes {graph.n}"]
    out += [
        f"{prefix}edge {i} {u} {v} {format_weight(w, graph.scale)}"
        for i, (u, v, w) in enumerate(graph.edges)
    ]
    out += [f"{prefix}crossing {c} {e} {f}" for c, (e, f) in sorted(config.crossings.items())]
    out += [
        f"{prefix}order {e} {' '.join(map(str, seq))}" for e, seq in sorted(config.order.items())
    ]
    return out


def serialize(inst: Instance) -> str:
    """Canonical text for ``inst``; parsing it gives ``inst`` back."""
    g = inst.graph
    lines = [f"nodes {g.n}"]
    if g.names is not None:
        lines += [f"name {u} {label}" for u, label in enumerate(g.names) if label != str(u)]
    lines += _graph_lines("", g, inst.config)[1:]
    if inst.realization is not None:
        R = inst.realization
        lines += _graph_lines("realize ", R.H, inst.realization_config or CrossingConfiguration())
        lines += [f"split {e}" for e in sorted(R.split_edges)]
        lines += [f"contract {h} {x}" for h, x in enumerate(R.contract)]
    return "\n".join(lines) + "\n"
