"""Polynomial-time exact MAX-CUT for planar graphs."""

from crossmax.planar.embedding import (
    DualGraph,
    NotPlanarError,
    RotationSystem,
    dual_graph,
    is_planar,
    planar_embedding,
)
from crossmax.planar.maxcut import PartitionError, max_cut_planar, recover_partition
from crossmax.planar.tjoin import (
    NoTJoinError,
    min_weight_perfect_matching,
    min_weight_t_join,
    shortest_paths,
)

__all__ = [
    "DualGraph",
    "NotPlanarError",
    "RotationSystem",
    "dual_graph",
    "is_planar",
    "planar_embedding",
    "PartitionError",
    "max_cut_planar",
    "recover_partition",
    "NoTJoinError",
    "min_weight_perfect_matching",
    "min_weight_t_join",
    "shortest_paths",
]
