"""Random and structured instances with known-feasible crossing configurations."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

import numpy as np
from scipy.spatial import Delaunay

from crossmax.crossings import CrossingConfiguration, is_good
from crossmax.drawing import DegenerateDrawingError, straight_line_crossings
from crossmax.graph import WeightedGraph
from crossmax.mcr import Realization

__all__ = [
    "DrawnInstance",
    "random_points",
    "random_planar_graph",
    "random_drawn_instance",
    "random_skeleton_instance",
    "RealizedInstance",
    "random_realized_instance",
    "realize_drawing",
    "crossing_family",
    "complete_graph",
    "complete_bipartite_graph",
]


@dataclass(frozen=True)
class DrawnInstance:
    graph: WeightedGraph
    config: CrossingConfiguration
    pos: tuple[tuple[int, int], ...] | None = None


def random_points(rng: random.Random, n: int, span: int = 10_000) -> list[tuple[int, int]]:
    """Distinct integer points with no three collinear."""
    pts: list[tuple[int, int]] = []
    while len(pts) < n:
        p = (rng.randrange(span), rng.randrange(span))
        if p in pts:
            continue
        if any(
            (b[0] - a[0]) * (p[1] - a[1]) == (b[1] - a[1]) * (p[0] - a[0])
            for a, b in itertools.combinations(pts, 2)
        ):
            continue
        pts.append(p)
    return pts


def _weights(rng: random.Random, m: int, low: int, high: int) -> list[int]:
    return [rng.randint(low, high) for _ in range(m)]


def _delaunay_edges(pts) -> list[tuple[int, int]]:
    if len(pts) < 3:
        return [(0, 1)] if len(pts) == 2 else []
    tri = Delaunay(np.asarray(pts, dtype=float))
    edges = set()
    for simplex in tri.simplices:
        for a, b in itertools.combinations(sorted(int(x) for x in simplex), 2):
            edges.add((a, b))
    return sorted(edges)


def random_planar_graph(
    rng: random.Random,
    n: int,
    keep: float = 0.8,
    weights: tuple[int, int] = (-10, 10),
    connected: bool = True,
) -> WeightedGraph:
    """Random subgraph of a Delaunay triangulation (a spanning tree is kept if ``connected``)."""
    pts = random_points(rng, n)
    edges = _delaunay_edges(pts)
    chosen = set()
    if connected and n > 1:
        # random spanning tree first
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in rng.sample(edges, len(edges)):
            if find(a) != find(b):
                parent[find(a)] = find(b)
                chosen.add((a, b))
    chosen.update(e for e in edges if rng.random() < keep)
    chosen = sorted(chosen)
    return WeightedGraph.from_edges(
        n, [(a, b, w) for (a, b), w in zip(chosen, _weights(rng, len(chosen), *weights))]
    )


def random_drawn_instance(
    rng: random.Random,
    n: int,
    max_crossings: int,
    density: float = 0.5,
    weights: tuple[int, int] = (-10, 10),
) -> DrawnInstance:
    """Straight-line drawing of a random graph with at most ``max_crossings`` crossings.

    Candidate edges are tried in random order and kept with probability
    ``density`` as long as the drawing stays within the crossing budget.
    """
    pts = random_points(rng, n)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    chosen: list[tuple[int, int]] = []
    k = 0
    for a, b in pairs:
        if rng.random() >= density:
            continue
        extra = sum(
            _segments_cross(pts[a], pts[b], pts[c], pts[d])
            for c, d in chosen
            if not {a, b} & {c, d}
        )
        if k + extra <= max_crossings:
            chosen.append((a, b))
            k += extra
    chosen.sort()
    g = WeightedGraph.from_edges(
        n, [(a, b, w) for (a, b), w in zip(chosen, _weights(rng, len(chosen), *weights))]
    )
    return DrawnInstance(g, straight_line_crossings(g, pts), tuple(pts))


def _segments_cross(a, b, c, d) -> bool:
    def orient(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    o1, o2, o3, o4 = orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def random_skeleton_instance(
    rng: random.Random,
    n: int,
    k: int,
    keep: float = 0.85,
    weights: tuple[int, int] = (-10, 10),
    attempts: int = 200,
) -> DrawnInstance:
    """Instance built from a planar skeleton whose degree-4 nodes become crossings.

    ``n + k`` points are triangulated; ``k`` of them are turned into dummy
    nodes by trimming them to four incident edges and joining opposite
    neighbors, following strands through adjacent dummies. Strands become
    (possibly multiply crossed, non-straight) edges between real nodes.
    Returns an instance with ``n`` nodes and between 0 and ``k`` crossings.
    """
    for _ in range(attempts):
        inst = _try_skeleton(rng, n, k, keep, weights)
        if inst is not None:
            return inst
    raise RuntimeError("could not generate a skeleton instance")


def _try_skeleton(rng, n, k, keep, weights):
    total = n + k
    pts = random_points(rng, total)
    adj: dict[int, set[int]] = {u: set() for u in range(total)}
    for a, b in _delaunay_edges(pts):
        adj[a].add(b)
        adj[b].add(a)
    dummies: set[int] = set()
    for _ in range(k):
        cands = [u for u in range(total) if u not in dummies and len(adj[u]) >= 4]
        if not cands:
            return None
        d = rng.choice(cands)
        # earlier dummies must keep all four of their edges
        pinned = adj[d] & dummies
        if len(pinned) > 4:
            return None
        keep_nb = pinned | set(rng.sample(sorted(adj[d] - pinned), 4 - len(pinned)))
        for u in adj[d] - keep_nb:
            adj[u].discard(d)
        adj[d] = keep_nb
        dummies.add(d)
    if any(len(adj[d]) != 4 for d in dummies):
        return None

    def angle(u, v):
        return math.atan2(pts[v][1] - pts[u][1], pts[v][0] - pts[u][0])

    # across[d][u] = neighbor opposite to u around d
    across: dict[int, dict[int, int]] = {}
    for d in dummies:
        ring = sorted(adj[d], key=lambda u: angle(d, u))
        across[d] = {ring[i]: ring[(i + 2) % 4] for i in range(4)}

    strands = []  # (start, end, dummies in order)
    used: set[tuple[int, int]] = set()
    for u in range(total):
        if u in dummies:
            continue
        for v in sorted(adj[u]):
            if (u, v) in used:
                continue
            prev, cur, path = u, v, []
            used.add((u, v))
            while cur in dummies:
                path.append(cur)
                if len(path) > k:
                    return None
                nxt = across[cur][prev]
                used.add((cur, nxt))
                prev, cur = cur, nxt
            used.add((cur, prev))
            if cur == u:
                return None
            strands.append((u, cur, path))
    # every dummy must be passed by exactly two strands
    passes: dict[int, list[int]] = {d: [] for d in dummies}
    for s, (_, _, path) in enumerate(strands):
        for d in path:
            passes[d].append(s)
    if any(len(v) != 2 or v[0] == v[1] for v in passes.values()):
        return None

    real = [u for u in range(total) if u not in dummies]
    relabel = {u: i for i, u in enumerate(real)}
    edges: dict[tuple[int, int], int] = {}
    for s, (a, b, path) in sorted(enumerate(strands), key=lambda item: not item[1][2]):
        key = (min(relabel[a], relabel[b]), max(relabel[a], relabel[b]))
        if key in edges:
            if path:
                return None
            continue  # a crossed strand already joins these nodes
        edges[key] = s
    # drop some plain skeleton edges for variety; strands always stay
    keys = [key for key, s in edges.items() if strands[s][2] or rng.random() < keep]
    keys.sort()
    eid = {key: i for i, key in enumerate(keys)}
    w = _weights(rng, len(keys), *weights)
    graph = WeightedGraph(n, tuple((a, b, w[i]) for i, (a, b) in enumerate(keys)))

    crossings, order = {}, {}
    cid = {d: i for i, d in enumerate(sorted(dummies))}
    for key in keys:
        a, b, path = strands[edges[key]]
        seq = [cid[d] for d in path]
        if relabel[a] > relabel[b]:
            seq.reverse()
        if seq:
            order[eid[key]] = tuple(seq)
        for c in seq:
            crossings.setdefault(c, []).append(eid[key])
    config = CrossingConfiguration({c: tuple(es) for c, es in crossings.items()}, order)
    if not is_good(graph, config):
        return None
    pos = tuple(pts[u] for u in real)
    return DrawnInstance(graph, config, pos)


@dataclass(frozen=True)
class RealizedInstance:
    graph: WeightedGraph
    realization: Realization
    config: CrossingConfiguration
    pos: tuple[tuple[int, int], ...]


def realize_drawing(
    graph: WeightedGraph, pos, zoom: int = 1000, radius: int = 40
) -> tuple[Realization, CrossingConfiguration, tuple[tuple[int, int], ...]]:
    """Degree-3 realization of a straight-line drawing, drawn alongside it.

    Every node of degree ``d > 3`` becomes a path of ``d - 2`` nodes on a
    circle of ``radius`` around its position (scaled by ``zoom``), each
    taking the next neighbors in angular order. Returns the realization,
    the crossings of its drawing and the new positions. Raises
    DegenerateDrawingError if rounding makes the drawing degenerate.
    """
    n = graph.n
    pts = [(x * zoom, y * zoom) for x, y in pos]
    contract = list(range(n))
    # holder[v][u]: node of v's path that keeps the edge towards u
    holder = {v: {u: v for u in graph.neighbors(v)} for v in range(n)}
    split_pairs = []
    for v in range(n):
        nbrs = graph.neighbors(v)
        if len(nbrs) <= 3:
            continue
        ang = {u: math.atan2(pos[u][1] - pos[v][1], pos[u][0] - pos[v][0]) for u in nbrs}
        ring = sorted(nbrs, key=ang.get)
        groups = [ring[:2]] + [[u] for u in ring[2:-2]] + [ring[-2:]]
        path = [v] + list(range(len(pts), len(pts) + len(groups) - 1))
        contract += [v] * (len(groups) - 1)
        pts += [(0, 0)] * (len(groups) - 1)
        for node, grp in zip(path, groups):
            a = math.atan2(sum(math.sin(ang[u]) for u in grp), sum(math.cos(ang[u]) for u in grp))
            pts[node] = (pts[v][0] + round(radius * math.cos(a)), pts[v][1] + round(radius * math.sin(a)))
            for u in grp:
                holder[v][u] = node
        split_pairs.extend(zip(path, path[1:]))
    edges = [(holder[a][b], holder[b][a], w) for a, b, w in graph.edges]
    edges += [(a, b, 0) for a, b in split_pairs]
    H = WeightedGraph.from_edges(len(pts), edges, scale=graph.scale)
    real = Realization(H, frozenset(range(graph.m, H.m)), tuple(contract))
    return real, straight_line_crossings(H, pts), tuple(pts)


def random_realized_instance(
    rng: random.Random,
    n: int,
    max_crossings: int = 3,
    density: float = 0.6,
    weights: tuple[int, int] = (-10, 10),
    max_realized_crossings: int = 6,
    attempts: int = 200,
) -> RealizedInstance:
    """Random straight-line instance together with a drawn degree-3 realization."""
    for _ in range(attempts):
        drawn = random_drawn_instance(rng, n, max_crossings, density, weights)
        try:
            real, config, pts = realize_drawing(drawn.graph, drawn.pos)
        except DegenerateDrawingError:
            continue
        if config.k <= max_realized_crossings:
            return RealizedInstance(drawn.graph, real, config, pts)
    raise RuntimeError("could not generate a realized instance")


def complete_graph(n: int, weight: int = 1) -> WeightedGraph:
    return WeightedGraph.from_edges(n, [(a, b, weight) for a, b in itertools.combinations(range(n), 2)])


def complete_bipartite_graph(p: int, q: int, weight: int = 1) -> WeightedGraph:
    return WeightedGraph.from_edges(
        p + q, [(a, p + b, weight) for a in range(p) for b in range(q)]
    )


def crossing_family(
    k: int, slots: int = 10, rows: int = 5, cols: int = 5, seed: int = 0
) -> DrawnInstance:
    """Grid core plus ``k`` crossed cells, for scaling runs.

    The core is a ``rows x cols`` grid of unit squares. ``slots`` cells
    away from the corners are reserved; the first ``k`` of them get both
    diagonals, which cross once inside the cell and cannot be drawn
    apart. Node count does not depend on ``k``; weights come from a fixed
    seed so members of one family differ only in their diagonals.
    """
    if not 0 <= k <= slots:
        raise ValueError(f"k must lie in [0, {slots}]")
    node = {(r, c): r * cols + c for r in range(rows) for c in range(cols)}
    pos = [(10 * c, 10 * r) for r in range(rows) for c in range(cols)]
    base = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                base.append((node[r, c], node[r, c + 1]))
            if r + 1 < rows:
                base.append((node[r, c], node[r + 1, c]))
    corners = {(0, 0), (0, cols - 2), (rows - 2, 0), (rows - 2, cols - 2)}
    # a diagonal of a corner cell could be rerouted through the outer face
    cells = [(r, c) for r in range(rows - 1) for c in range(cols - 1) if (r, c) not in corners]
    cells.sort(key=lambda rc: ((rc[0] + rc[1]) % 2, rc))
    if slots > len(cells):
        raise ValueError("grid too small for the requested number of slots")

    def diagonals(r, c):
        return [(node[r, c], node[r + 1, c + 1]), (node[r, c + 1], node[r + 1, c])]

    rng = random.Random(seed)
    universe = base + [d for rc in cells[:slots] for d in diagonals(*rc)]
    wmap = {
        p: rng.choice([w for w in range(-10, 11) if w])
        for p in sorted((min(a, b), max(a, b)) for a, b in universe)
    }
    chosen = base + [d for rc in cells[:k] for d in diagonals(*rc)]
    pairs = sorted((min(a, b), max(a, b)) for a, b in chosen)
    g = WeightedGraph(rows * cols, tuple((a, b, wmap[p]) for p in pairs for a, b in [p]))
    return DrawnInstance(g, straight_line_crossings(g, pos), tuple(pos))
