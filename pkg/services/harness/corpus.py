"""
Детерминированный корпус малых графов для структурных наборов проверок.

Сначала идут именованные семейства, затем случайные хордальные графы,
деревья и графы с независимо выбранными ребрами, пока корпус не
достигнет нужного размера. Генератор numpy фиксируется зерном.
"""

from functools import lru_cache
from itertools import combinations
from typing import Optional

import logging

import numpy as np

from core.config import settings
from domain.bitsets import full_mask
from domain.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    edgeless,
    grid,
    induced_subgraph,
    make_graph,
    path,
    prism,
    random_chordal_graph,
    random_tree,
    square_with_pendants,
    squared_cycle,
)

logger = logging.getLogger(__name__)


def _named_graphs(max_n: int) -> list[Graph]:
    named: list[Graph] = []
    named += [path(n) for n in range(1, max_n + 1)]
    named += [cycle(n) for n in range(3, max_n + 1)]
    named += [complete(n) for n in range(1, min(max_n, 5) + 1)]
    named += [edgeless(n) for n in range(1, min(max_n, 6) + 1)]
    named += [
        complete_bipartite(m, n)
        for m in range(1, max_n)
        for n in range(m, max_n - m + 1)
    ]
    named += [prism(n) for n in range(2, max_n // 2 + 1)]
    # призма без вершины 1⁺
    named += [
        induced_subgraph(prism(n), full_mask(2 * n) & ~1, name=f"Prism{n}-v")
        for n in range(3, (max_n + 1) // 2 + 1)
    ]
    named += [grid(2, n) for n in range(2, max_n // 2 + 1)]
    named += [squared_cycle(n) for n in range(6, max_n + 1)]
    if max_n >= 6:
        named.append(square_with_pendants())
    return named


def _random_graph(n: int, rng: np.random.Generator) -> Graph:
    density = float(rng.uniform(0.2, 0.7))
    edges = [pair for pair in combinations(range(n), 2) if rng.random() < density]
    return make_graph(n, edges, name=f"random{n}")


@lru_cache(maxsize=8)
def build_corpus(
    size: Optional[int] = None,
    max_n: Optional[int] = None,
    seed: Optional[int] = None,
) -> tuple[Graph, ...]:
    """
    Корпус из size различных графов с не более чем max_n вершинами.

    :param size: Размер корпуса (по умолчанию CUTCOMPLEX_CORPUS_SIZE)
    :param max_n: Максимум вершин (по умолчанию CUTCOMPLEX_CORPUS_MAX_N)
    :param seed: Зерно генератора (по умолчанию CUTCOMPLEX_CORPUS_SEED)
    """
    size = settings.CUTCOMPLEX_CORPUS_SIZE if size is None else size
    max_n = settings.CUTCOMPLEX_CORPUS_MAX_N if max_n is None else max_n
    seed = settings.CUTCOMPLEX_CORPUS_SEED if seed is None else seed
    rng = np.random.default_rng(seed)

    corpus: list[Graph] = []
    seen: set[Graph] = set()

    def offer(G: Graph) -> None:
        if len(corpus) < size and G not in seen:
            seen.add(G)
            corpus.append(G)

    for G in _named_graphs(max_n):
        offer(G)

    makers = (random_chordal_graph, random_tree, _random_graph)
    attempts = 0
    while len(corpus) < size and attempts < 50 * size:
        maker = makers[attempts % len(makers)]
        n = int(rng.integers(1, max_n + 1))
        offer(maker(n, rng))
        attempts += 1

    if len(corpus) < size:
        logger.warning("Корпус неполный: %d из %d графов", len(corpus), size)
    logger.info("Корпус графов: %d графов, n <= %d, зерно %d", len(corpus), max_n, seed)
    return tuple(corpus)
