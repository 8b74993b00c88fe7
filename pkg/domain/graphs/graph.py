"""
Простые неориентированные графы на вершинах 0..n-1.

Строка смежности adj[i] - битовая маска соседей вершины i. Графы неизменяемы,
все функции модуля чистые и безопасны для вызова из нескольких потоков.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import logging

from core.config import settings
from core.errors import InvalidInputError
from domain.bitsets import full_mask, iter_bits, is_subset, lowest_bit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Простой граф: n вершин и кортеж масок смежности"""

    n: int
    adj: tuple[int, ...]
    name: Optional[str] = field(default=None, compare=False)

    @property
    def vertices(self) -> int:
        return full_mask(self.n)

    def neighbors(self, v: int) -> int:
        """N(v) как маска"""
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Ребра (i, j) с i < j в лексикографическом порядке"""
        return [
            (i, j)
            for i in range(self.n)
            for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))
        ]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def label(self) -> str:
        return self.name or f"G(n={self.n}, m={self.num_edges})"


def make_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    name: Optional[str] = None,
) -> Graph:
    """
    Строит граф по списку ребер.

    Повторные ребра (в том числе (i, j) и (j, i)) схлопываются.
    Петли и индексы вне 0..n-1 - отказ.
    """
    if n < 0:
        raise InvalidInputError(f"Число вершин не может быть отрицательным: {n}")
    if n > settings.CUTCOMPLEX_WORD_WIDTH:
        raise InvalidInputError(
            f"Число вершин {n} превышает ширину слова {settings.CUTCOMPLEX_WORD_WIDTH}"
        )

    adj = [0] * n
    for edge in edges:
        i, j = edge
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidInputError(f"Ребро ({i}, {j}) выходит за пределы 0..{n - 1}")
        if i == j:
            raise InvalidInputError(f"Петля в вершине {i} недопустима")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n=n, adj=tuple(adj), name=name)


def _check_subset(G: Graph, S: int) -> None:
    if S < 0 or not is_subset(S, G.vertices):
        raise InvalidInputError(f"Множество {S:#x} не является подмножеством вершин графа на {G.n} вершинах")


def is_independent(G: Graph, S: int) -> bool:
    """Нет ни одного ребра внутри S. Пустое множество и одиночки независимы."""
    _check_subset(G, S)
    return all(G.adj[v] & S == 0 for v in iter_bits(S))


def is_clique(G: Graph, S: int) -> bool:
    """Любые две вершины S смежны"""
    _check_subset(G, S)
    return all(S & ~(1 << v) & ~G.adj[v] == 0 for v in iter_bits(S))


def independent_sets(G: Graph, k: int, within: Optional[int] = None) -> Iterator[int]:
    """
    Все независимые множества размера k, по возрастанию масок.

    Старший элемент перебирается по возрастанию, остаток рекурсивно берется
    среди несмежных с ним вершин ниже него. Так каждое множество выдается
    ровно один раз и порядок совпадает с порядком чисел.
    """
    if k < 1:
        raise InvalidInputError(f"Размер независимого множества должен быть >= 1, получено {k}")
    pool = G.vertices if within is None else within & G.vertices
    yield from _independent_below(G.adj, pool, k)


def _independent_below(adj: tuple[int, ...], pool: int, k: int) -> Iterator[int]:
    if k == 0:
        yield 0
        return
    if pool.bit_count() < k:
        return
    for top in iter_bits(pool):
        below = pool & ((1 << top) - 1) & ~adj[top]
        if below.bit_count() < k - 1:
            continue
        bit = 1 << top
        for rest in _independent_below(adj, below, k - 1):
            yield rest | bit


def has_independent_set(G: Graph, k: int) -> bool:
    return next(independent_sets(G, k), None) is not None


def independence_number(G: Graph) -> int:
    """
    Точное число независимости перебором с отсечениями.

    Вершину степени <= 1 (внутри оставшегося множества) можно брать без
    ветвления; иначе ветвимся по вершине максимальной степени. Граница -
    текущий размер плюс число оставшихся вершин.
    """
    adj = G.adj
    best = 0

    def search(pool: int, size: int) -> None:
        nonlocal best
        if size + pool.bit_count() <= best:
            return
        if not pool:
            best = size
            return
        for v in iter_bits(pool):
            if (adj[v] & pool).bit_count() <= 1:
                search(pool & ~(1 << v) & ~adj[v], size + 1)
                return
        v = max(iter_bits(pool), key=lambda u: (adj[u] & pool).bit_count())
        search(pool & ~(1 << v) & ~adj[v], size + 1)
        search(pool & ~(1 << v), size)

    search(G.vertices, 0)
    return best


def simplicial_vertices(G: Graph) -> int:
    """Вершины, окрестность которых - клика (изолированные тоже)"""
    result = 0
    for v in range(G.n):
        if is_clique(G, G.neighbors(v)):
            result |= 1 << v
    return result


def is_simplicial(G: Graph, v: int) -> bool:
    return is_clique(G, G.neighbors(v))


def perfect_elimination_order(G: Graph) -> Optional[list[int]]:
    """
    Совершенный порядок исключения или None, если граф не хордальный.

    Порядок - обращенный порядок обхода поиска максимальной мощности (MCS),
    после чего он проверяется: более поздние соседи каждой вершины обязаны
    образовывать клику.
    """
    n = G.n
    weight = [0] * n
    unvisited = G.vertices
    visit: list[int] = []
    while unvisited:
        v = max(iter_bits(unvisited), key=lambda u: (weight[u], -u))
        visit.append(v)
        unvisited &= ~(1 << v)
        for u in iter_bits(G.adj[v] & unvisited):
            weight[u] += 1

    order = visit[::-1]
    later = G.vertices
    for v in order:
        later &= ~(1 << v)
        if not is_clique(G, G.adj[v] & later):
            logger.debug("Граф %s не хордальный: проверка порядка упала на вершине %d", G.label(), v)
            return None
    return order


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_order(G) is not None


def induced_subgraph(G: Graph, W: int, name: Optional[str] = None) -> Graph:
    """Индуцированный подграф на W с сохраняющей порядок перенумерацией в 0..|W|-1"""
    _check_subset(G, W)
    kept = list(iter_bits(W))
    position = {v: i for i, v in enumerate(kept)}
    adj = []
    for v in kept:
        row = 0
        for u in iter_bits(G.adj[v] & W):
            row |= 1 << position[u]
        adj.append(row)
    return Graph(n=len(kept), adj=tuple(adj), name=name)


def delete_vertices(G: Graph, W: int) -> Graph:
    """Граф G без вершин W (оставшиеся перенумерованы по порядку)"""
    _check_subset(G, W)
    return induced_subgraph(G, G.vertices & ~W)


def add_isolated_vertex(G: Graph) -> Graph:
    """G ⊔ v: новая вершина с номером n без соседей"""
    if G.n + 1 > settings.CUTCOMPLEX_WORD_WIDTH:
        raise InvalidInputError(
            f"Нельзя добавить вершину: превышена ширина слова {settings.CUTCOMPLEX_WORD_WIDTH}"
        )
    return Graph(n=G.n + 1, adj=G.adj + (0,), name=f"{G.label()} + v" if G.name else None)


def complement(G: Graph) -> Graph:
    full = G.vertices
    adj = tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj))
    return Graph(n=G.n, adj=adj, name=f"co-{G.name}" if G.name else None)


def components(G: Graph, within: Optional[int] = None) -> list[int]:
    """Компоненты связности индуцированного подграфа, по возрастанию минимальной вершины"""
    remaining = G.vertices if within is None else within
    _check_subset(G, remaining)
    result = []
    while remaining:
        frontier = 1 << lowest_bit(remaining)
        component = frontier
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= G.adj[v]
            frontier = reach & remaining & ~component
            component |= frontier
        result.append(component)
        remaining &= ~component
    return result


def is_connected(G: Graph, W: Optional[int] = None) -> bool:
    """Связность индуцированного подграфа на W (пустой и одновершинный считаются связными)"""
    return len(components(G, W)) <= 1
