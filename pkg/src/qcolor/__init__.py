"""Solvers for the min-max edge q-coloring problem."""

from ._kernels import BACKEND
from .graph import (
    EdgeColoring,
    Graph,
    QSpec,
    SolveReport,
    build_graph,
    canonicalize,
    degree_stats,
    group_sizes,
    is_tree,
    validate,
)

__all__ = [
    "BACKEND",
    "EdgeColoring",
    "Graph",
    "QSpec",
    "SolveReport",
    "build_graph",
    "canonicalize",
    "degree_stats",
    "group_sizes",
    "is_tree",
    "validate",
]
