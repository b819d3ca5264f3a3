"""Solver results and run statistics."""

from __future__ import annotations

from dataclasses import dataclass, field

from crossmax.graph import Cut

__all__ = ["NEG_INF", "SolveStats", "SolveResult"]

#: Value of an infeasible PF-MAX-CUT instance. Compares correctly with ints.
NEG_INF = float("-inf")


@dataclass
class SolveStats:
    """Counters for one run of the branching solver.

    ``branches`` counts leaves of the branch tree (planar base cases plus
    subtrees pruned as infeasible), so it never exceeds ``2**k``.
    """

    branches: int = 0
    base_cases: int = 0
    splits: int = 0
    pruned: int = 0
    max_depth: int = 0
    base_sizes: list[tuple[int, int]] = field(default_factory=list)
    level_seconds: list[float] = field(default_factory=list)

    def add_time(self, depth: int, seconds: float) -> None:
        while len(self.level_seconds) <= depth:
            self.level_seconds.append(0.0)
        self.level_seconds[depth] += seconds

    def merge(self, other: SolveStats) -> None:
        self.branches += other.branches
        self.base_cases += other.base_cases
        self.splits += other.splits
        self.pruned += other.pruned
        self.max_depth = max(self.max_depth, other.max_depth)
        self.base_sizes.extend(other.base_sizes)
        for d, t in enumerate(other.level_seconds):
            self.add_time(d, t)


@dataclass
class SolveResult:
    """Optimal value (``NEG_INF`` if infeasible) and a witness cut."""

    value: int | float
    witness: Cut | None
    stats: SolveStats = field(default_factory=SolveStats)

    def __post_init__(self) -> None:
        if (self.witness is None) != (self.value == NEG_INF):
            raise ValueError("witness must be present exactly when the value is finite")

    @classmethod
    def infeasible(cls, stats: SolveStats | None = None) -> SolveResult:
        return cls(NEG_INF, None, stats or SolveStats())

    @property
    def feasible(self) -> bool:
        return self.witness is not None
