"""
Доменный модуль тотальных k-разрезных комплексов.
"""

from .cut_complexes import (
    total_cut_complex,
    cut_complex,
    next_total_from_ridges,
    verify_isolated_decomposition,
    lift_from_induced,
    no_independent_k_subsets,
)
from .realizability import (
    iter_realizing_graphs,
    maximal_realizing_graph,
    forced_facets,
    find_realization,
)

__all__ = [
    "total_cut_complex",
    "cut_complex",
    "next_total_from_ridges",
    "verify_isolated_decomposition",
    "lift_from_induced",
    "no_independent_k_subsets",
    "iter_realizing_graphs",
    "maximal_realizing_graph",
    "forced_facets",
    "find_realization",
]
