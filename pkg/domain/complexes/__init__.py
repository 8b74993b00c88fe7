"""
Доменный модуль симплициальных комплексов в форме фасет.
"""

from .complex import SimplicialComplex, FaceIndex
from .operations import (
    simplex,
    boundary_of_simplex,
    star,
    link,
    deletion,
    join,
    cone,
    two_points,
    suspension,
    skeleton,
    alexander_dual,
    clique_complex,
    union,
    intersection,
    contains,
    relabel,
)
from .io import parse_complex_text, format_complex_text, load_complex, save_complex

__all__ = [
    "SimplicialComplex",
    "FaceIndex",
    "simplex",
    "boundary_of_simplex",
    "star",
    "link",
    "deletion",
    "join",
    "cone",
    "two_points",
    "suspension",
    "skeleton",
    "alexander_dual",
    "clique_complex",
    "union",
    "intersection",
    "contains",
    "relabel",
    "parse_complex_text",
    "format_complex_text",
    "load_complex",
    "save_complex",
]
