"""
Доменный модуль графов.

Простые графы на битовых масках, генераторы семейств и примитивы
независимости и хордальности без привязки к FastAPI или вводу-выводу.
"""

from .graph import (
    Graph,
    make_graph,
    is_independent,
    is_clique,
    independent_sets,
    has_independent_set,
    independence_number,
    simplicial_vertices,
    is_simplicial,
    perfect_elimination_order,
    is_chordal,
    induced_subgraph,
    delete_vertices,
    add_isolated_vertex,
    complement,
    components,
    is_connected,
)
from .families import (
    path,
    cycle,
    complete,
    edgeless,
    complete_bipartite,
    prism,
    grid,
    squared_cycle,
    square_with_pendants,
    family,
    family_name,
    parse_family_spec,
    parse_graph_spec,
    random_chordal_graph,
    random_tree,
)
from .io import parse_graph_text, format_graph_text, load_graph

__all__ = [
    "Graph",
    "make_graph",
    "is_independent",
    "is_clique",
    "independent_sets",
    "has_independent_set",
    "independence_number",
    "simplicial_vertices",
    "is_simplicial",
    "perfect_elimination_order",
    "is_chordal",
    "induced_subgraph",
    "delete_vertices",
    "add_isolated_vertex",
    "complement",
    "components",
    "is_connected",
    "path",
    "cycle",
    "complete",
    "edgeless",
    "complete_bipartite",
    "prism",
    "grid",
    "squared_cycle",
    "square_with_pendants",
    "family",
    "family_name",
    "parse_family_spec",
    "parse_graph_spec",
    "random_chordal_graph",
    "random_tree",
    "parse_graph_text",
    "format_graph_text",
    "load_graph",
]
