"""Crossing configurations of straight-line drawings, in exact arithmetic."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from crossmax.crossings import CrossingConfiguration
from crossmax.graph import WeightedGraph

__all__ = ["DegenerateDrawingError", "straight_line_crossings"]

Point = tuple[int, int]


class DegenerateDrawingError(ValueError):
    """Segments overlap, or a segment passes through a node."""


def _orient(a: Point, b: Point, c: Point) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    return (
        _orient(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def straight_line_crossings(graph: WeightedGraph, pos: Sequence[Point]) -> CrossingConfiguration:
    """Crossings of the drawing with node ``u`` at integer point ``pos[u]``.

    Crossing ids follow the order in which edge pairs ``(e, f)``, ``e < f``,
    are scanned. Raises DegenerateDrawingError for overlapping segments or
    a segment through a node, which straight lines cannot draw as a
    proper crossing.
    """
    if len(set(map(tuple, pos))) != graph.n:
        raise DegenerateDrawingError("two nodes share a position")
    segs = [(pos[u], pos[v]) for u, v, _ in graph.edges]
    for e, (u, v, _) in enumerate(graph.edges):
        a, b = segs[e]
        for x in range(graph.n):
            if x not in (u, v) and _on_segment(a, b, pos[x]):
                raise DegenerateDrawingError(f"node {x} lies on edge {e}")
    pairs = []
    along: dict[int, list[tuple[Fraction, int]]] = {}
    for e in range(graph.m):
        a, b = segs[e]
        ends_e = set(graph.edges[e][:2])
        for f in range(e + 1, graph.m):
            c, d = segs[f]
            o1, o2 = _orient(a, b, c), _orient(a, b, d)
            o3, o4 = _orient(c, d, a), _orient(c, d, b)
            if ends_e & set(graph.edges[f][:2]):
                # collinear neighbors overlap only if they leave the shared end the same way
                if o1 == 0 and o2 == 0 and (_on_segment(a, b, c) and _on_segment(a, b, d)
                                            or _on_segment(c, d, a) and _on_segment(c, d, b)):
                    raise DegenerateDrawingError(f"edges {e} and {f} overlap")
                continue
            if o1 == 0 and o2 == 0:
                if _on_segment(a, b, c) or _on_segment(a, b, d) or _on_segment(c, d, a):
                    raise DegenerateDrawingError(f"edges {e} and {f} overlap")
                continue
            if (o1 > 0) != (o2 > 0) and (o3 > 0) != (o4 > 0) and 0 not in (o1, o2, o3, o4):
                cid = len(pairs)
                pairs.append((e, f))
                # parameters along e (from a) and f (from c); a, c are the lower endpoints
                te = Fraction(o3, o3 - o4)
                tf = Fraction(o1, o1 - o2)
                along.setdefault(e, []).append((te, cid))
                along.setdefault(f, []).append((tf, cid))
    order = {e: tuple(c for _, c in sorted(lst)) for e, lst in along.items()}
    return CrossingConfiguration(dict(enumerate(pairs)), order)
