"""Exact MAX-CUT by branching on crossings.

Each crossing split produces two subinstances that together cover every
feasible cut, so after at most k levels every leaf is planar and is solved
by the dual/T-join engine with the fixed edges enforced by a large weight.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from crossmax.crossings import (
    CrossingConfiguration,
    NonGoodConfigurationError,
    good_violations,
    reduce_touches,
)
from crossmax.graph import Cut, PFInstance, WeightedGraph, pf_infeasible
from crossmax.planar import NotPlanarError, RotationSystem, is_planar, max_cut_planar, planar_embedding
from crossmax.result import NEG_INF, SolveResult, SolveStats
from crossmax.split import Triplet, crossing_split, lift_cut

__all__ = [
    "BigM",
    "SolveResult",
    "SolveStats",
    "NEG_INF",
    "Priority",
    "choose_crossing",
    "solve_pf_planar",
    "solve",
    "solve_triplet",
]

Strategy = Callable[[Triplet], int]


@dataclass(frozen=True)
class BigM:
    """Penalty forcing fixed edges into the cut, and the feasibility threshold.

    ``M = 2 * sum |c_e|``; a cut holds every fixed edge iff the penalized
    value reaches ``M * |F| + sum of negative weights``.
    """

    M: int
    threshold: int

    @classmethod
    def of(cls, inst: PFInstance) -> BigM:
        edges = inst.graph.edges
        M = 2 * sum(abs(w) for _, _, w in edges)
        return cls(M, M * len(inst.fixed) + sum(w for _, _, w in edges if w < 0))


def solve_pf_planar(inst: PFInstance, embedding: RotationSystem | None = None) -> SolveResult:
    """Maximum cut of a planar instance that contains every fixed edge.

    Fixed edges must weigh zero; they are given weight M, so any cut
    missing one falls below the threshold.
    """
    g = inst.graph
    for f in inst.fixed:
        if g.edges[f][2] != 0:
            raise ValueError(f"fixed edge {f} has nonzero weight")
    bigm = BigM.of(inst)
    M, threshold = bigm.M, bigm.threshold
    if M == 0:
        # all weights vanish; any positive penalty separates feasible cuts
        M, threshold = 1, len(inst.fixed)
    weights = [M if i in inst.fixed else w for i, (_, _, w) in enumerate(g.edges)]
    cut = max_cut_planar(g.with_weights(weights), embedding)
    stats = SolveStats(branches=1, base_cases=1)
    if cut.value < threshold:
        return SolveResult.infeasible(stats)
    value = cut.value - M * len(inst.fixed)
    return SolveResult(value, Cut(cut.side, value), stats)


@dataclass(frozen=True)
class Priority:
    """Strategy picking the first present crossing of a fixed id ranking.

    Crossings missing from the ranking come last, by id.
    """

    ranking: tuple[int, ...]

    def __call__(self, triplet: Triplet) -> int:
        rank = {c: i for i, c in enumerate(self.ranking)}
        return min(triplet.config.crossings, key=lambda c: (rank.get(c, len(rank)), c))


def _lowest(triplet: Triplet) -> int:
    return min(triplet.config.crossings)


def _highest(triplet: Triplet) -> int:
    return max(triplet.config.crossings)


def _busiest(triplet: Triplet) -> int:
    # crossing whose edges carry the most crossings in total
    order = triplet.config.order
    return max(
        triplet.config.crossings,
        key=lambda c: (sum(len(order[e]) for e in triplet.config.crossings[c]), -c),
    )


STRATEGIES: dict[str, Strategy] = {"lowest": _lowest, "highest": _highest, "busiest": _busiest}


def choose_crossing(triplet: Triplet, strategy: str | Strategy = "lowest") -> int:
    if not triplet.config.crossings:
        raise ValueError("triplet has no crossings")
    pick = STRATEGIES[strategy] if isinstance(strategy, str) else strategy
    c = pick(triplet)
    if c not in triplet.config.crossings:
        raise ValueError(f"strategy returned unknown crossing {c}")
    return c


def _better(a: SolveResult, b: SolveResult) -> bool:
    """True if ``b`` should replace ``a``; ties keep ``a``."""
    return b.value > a.value


def _recurse(triplet: Triplet, strategy: str | Strategy, depth: int, stats: SolveStats) -> SolveResult:
    t0 = time.perf_counter()
    stats.max_depth = max(stats.max_depth, depth)
    inst = triplet.instance
    if pf_infeasible(inst):
        stats.branches += 1
        stats.pruned += 1
        stats.add_time(depth, time.perf_counter() - t0)
        return SolveResult.infeasible()
    try:
        emb = planar_embedding(inst.graph)
    except NotPlanarError:
        emb = None
    if emb is not None:
        res = solve_pf_planar(inst, emb)
        stats.branches += 1
        stats.base_cases += 1
        stats.base_sizes.append((depth, inst.graph.n))
        if not res.feasible:
            stats.pruned += 1
        stats.add_time(depth, time.perf_counter() - t0)
        return res
    if not triplet.config.crossings:
        raise NotPlanarError("non-planar subinstance has no crossings left; configuration was infeasible")
    chi = choose_crossing(triplet, strategy)
    tv, tw = crossing_split(triplet, chi)
    stats.splits += 1
    stats.add_time(depth, time.perf_counter() - t0)
    rv = _recurse(tv, strategy, depth + 1, stats)
    rw = _recurse(tw, strategy, depth + 1, stats)
    return _merge(rv, rw, tv, tw)


def _merge(rv: SolveResult, rw: SolveResult, tv: Triplet, tw: Triplet) -> SolveResult:
    best, child = (rw, tw) if _better(rv, rw) else (rv, tv)
    if not best.feasible:
        return SolveResult.infeasible()
    return SolveResult(best.value, lift_cut(best.witness, child.lineage))


def _solve_subtree(args: tuple[Triplet, str | Strategy, int]) -> SolveResult:
    triplet, strategy, depth = args
    stats = SolveStats()
    res = _recurse(triplet, strategy, depth, stats)
    res.stats = stats
    return res


def _expand(triplet, strategy, depth, levels, stats, frontier):
    """Split the top ``levels`` of the branch tree; collect subtree roots.

    Returns a nested plan mirroring the tree; leaves are frontier indices.
    """
    t0 = time.perf_counter()
    inst = triplet.instance
    if levels == 0 or pf_infeasible(inst) or is_planar(inst.graph) or not triplet.config.crossings:
        frontier.append((triplet, strategy, depth))
        return len(frontier) - 1
    chi = choose_crossing(triplet, strategy)
    tv, tw = crossing_split(triplet, chi)
    stats.splits += 1
    stats.max_depth = max(stats.max_depth, depth)
    stats.add_time(depth, time.perf_counter() - t0)
    return (
        _expand(tv, strategy, depth + 1, levels - 1, stats, frontier),
        _expand(tw, strategy, depth + 1, levels - 1, stats, frontier),
        tv,
        tw,
    )


def _collapse(plan, results):
    if isinstance(plan, int):
        return results[plan]
    pv, pw, tv, tw = plan
    return _merge(_collapse(pv, results), _collapse(pw, results), tv, tw)


def solve_triplet(
    triplet: Triplet,
    strategy: str | Strategy = "lowest",
    parallel: int = 0,
) -> SolveResult:
    """Run the branching recursion on a prepared triplet.

    With ``parallel > 1`` the top of the branch tree is expanded and its
    subtrees are solved in worker processes; results merge in the same
    order and with the same tie-break as the sequential run.
    """
    stats = SolveStats()
    if parallel <= 1:
        res = _recurse(triplet, strategy, 0, stats)
    else:
        frontier: list[tuple[Triplet, str | Strategy, int]] = []
        levels = max(1, (4 * parallel - 1).bit_length())
        plan = _expand(triplet, strategy, 0, levels, stats, frontier)
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_solve_subtree, frontier))
        for r in results:
            stats.merge(r.stats)
        res = _collapse(plan, results)
    res.stats = stats
    return res


def solve(
    graph: WeightedGraph,
    config: CrossingConfiguration | None = None,
    *,
    strategy: str | Strategy = "lowest",
    parallel: int = 0,
    check: bool = True,
) -> SolveResult:
    """Maximum cut of ``graph`` drawn with the crossings of ``config``.

    The configuration must be good. Touches are removed first; an
    infeasible configuration raises InfeasibleConfigurationError. The
    witness is normalized so that node 0 lies in S.
    """
    config = config if config is not None else CrossingConfiguration()
    if check:
        problems = good_violations(graph, config)
        if problems:
            raise NonGoodConfigurationError("; ".join(problems))
        config, _ = reduce_touches(graph, config)
    res = solve_triplet(Triplet.root(graph, config), strategy, parallel)
    if res.witness is not None:
        res.witness = res.witness.normalized()
    return res
