"""Dual graded graphs from combinatorial Hopf algebras, in exact Z[q] arithmetic."""

from .qpoly import QPoly, q_binomial, q_factorial, q_int
from .hopf import HopfSkeleton, LinComb, get_skeleton
from .dgg import GradedGraph, build_graphs, check_duality, fomin_check, path_count

__all__ = [
    "QPoly",
    "q_int",
    "q_factorial",
    "q_binomial",
    "HopfSkeleton",
    "LinComb",
    "get_skeleton",
    "GradedGraph",
    "build_graphs",
    "check_duality",
    "fomin_check",
    "path_count",
]
