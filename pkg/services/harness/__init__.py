"""
Проверка утверждений о тотальных разрезных комплексах: наборы проверок,
свипы гипотез и таблицы чисел Бетти.
"""

from .corpus import build_corpus
from .ranges import parse_ranges, format_ranges, merge_ranges
from .suites import SUITES, run_suite
from .conjectures import sweep_conjecture, squared_cycle_predictions, grid_predictions
from .tables import betti_table, emit_table, render_table, table_cell

__all__ = [
    "build_corpus",
    "parse_ranges",
    "format_ranges",
    "merge_ranges",
    "SUITES",
    "run_suite",
    "sweep_conjecture",
    "squared_cycle_predictions",
    "grid_predictions",
    "betti_table",
    "emit_table",
    "render_table",
    "table_cell",
]
