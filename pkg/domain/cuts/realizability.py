"""
Реализуемость набора фасет тотальным k-разрезным комплексом.

Фасета F ⊆ Δᵗ_k(G) тогда и только тогда, когда V ∖ F - независимое
k-множество, то есть все пары внутри V ∖ F - обязательные не-ребра.
Остальные пары свободны, и перебор идет по подмножествам свободных пар.
"""

from itertools import combinations
from typing import Iterable, Iterator, Optional

import logging

from core.config import settings
from core.errors import InvalidInputError
from domain.bitsets import full_mask, iter_bits, is_subset, format_mask
from domain.complexes import SimplicialComplex
from domain.graphs import Graph, make_graph
from .cut_complexes import total_cut_complex

logger = logging.getLogger(__name__)


def _validate(facets: list[int], n: int, k: int) -> None:
    if k < 2:
        raise InvalidInputError(f"k должно быть >= 2, получено {k}")
    cap = settings.CUTCOMPLEX_REALIZABILITY_MAX_N
    if n > cap:
        raise InvalidInputError(f"Перебор графов ограничен n <= {cap}, получено {n}")
    full = full_mask(n)
    for face in facets:
        if face < 0 or not is_subset(face, full):
            raise InvalidInputError(f"Фасета {format_mask(face)} выходит за носитель 0..{n - 1}")


def _free_pairs(facets: list[int], n: int, k: int) -> Optional[list[tuple[int, int]]]:
    """Свободные пары или None, если какое-то дополнение не имеет размера k"""
    full = full_mask(n)
    forced_non_edges = set()
    for face in facets:
        complement = full & ~face
        if complement.bit_count() != k:
            return None
        forced_non_edges.update(combinations(iter_bits(complement), 2))
    return [pair for pair in combinations(range(n), 2) if pair not in forced_non_edges]


def iter_realizing_graphs(
    facets: Iterable[int],
    n: int,
    k: int,
    exact: bool = False,
) -> Iterator[Graph]:
    """
    Все графы на n вершинах, у которых Δᵗ_k содержит заданные фасеты
    (при exact=True - совпадает с ними).

    Графы выдаются от максимального по ребрам к пустому.
    """
    facets = sorted(set(facets))
    _validate(facets, n, k)
    free = _free_pairs(facets, n, k)
    if free is None:
        return
    target = tuple(facets)
    for chosen in range((1 << len(free)) - 1, -1, -1):
        G = make_graph(n, [free[i] for i in iter_bits(chosen)])
        if exact and total_cut_complex(G, k).facets != target:
            continue
        yield G


def maximal_realizing_graph(facets: Iterable[int], n: int, k: int) -> Optional[Graph]:
    """Граф со всеми свободными ребрами: его независимые множества есть у любого реализующего графа"""
    facets = sorted(set(facets))
    _validate(facets, n, k)
    free = _free_pairs(facets, n, k)
    if free is None:
        return None
    return make_graph(n, free, name="maximal")


def forced_facets(facets: Iterable[int], n: int, k: int) -> Optional[SimplicialComplex]:
    """
    Фасеты, присутствующие в Δᵗ_k(G) для каждого графа G, содержащего заданные.

    Добавление ребер только уничтожает независимые множества, поэтому
    пересечение по всем реализующим графам равно Δᵗ_k максимального графа.
    """
    G = maximal_realizing_graph(facets, n, k)
    if G is None:
        return None
    return total_cut_complex(G, k)


def find_realization(
    facets: Iterable[int],
    n: int,
    k: int,
    exact: bool = False,
) -> Optional[Graph]:
    """Первый найденный реализующий граф или None"""
    facets = list(facets)
    witness = next(iter_realizing_graphs(facets, n, k, exact=exact), None)
    if witness is None:
        logger.info("Нет графа на %d вершинах, реализующего %d фасет при k=%d", n, len(facets), k)
    return witness
