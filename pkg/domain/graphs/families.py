"""
Генераторы семейств графов и разбор строковых спецификаций вида "grid:3,4".

Нумерация вершин (0-базная):
  - полный двудольный K_{m,n}: доля a_i -> 0..m-1, доля b_j -> m..m+n-1;
  - призма K_n × K_2: i⁺ -> 0..n-1, i⁻ -> n..2n-1;
  - решетка G(m, n): строки по n вершин, вершина (i, j) -> i*n + j;
  - квадрат цикла W_n: ребра (i, i+1 mod n) и (i, i+2 mod n).
"""

import numpy as np

from core.errors import InvalidInputError
from domain.bitsets import iter_bits
from models.harness import GraphFamily, to_enum
from .graph import Graph, make_graph


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidInputError(message)


def path(n: int) -> Graph:
    _require(n >= 1, f"Путь требует n >= 1, получено {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    _require(n >= 3, f"Цикл требует n >= 3, получено {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete(n: int) -> Graph:
    _require(n >= 1, f"Полный граф требует n >= 1, получено {n}")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}")


def edgeless(n: int) -> Graph:
    _require(n >= 1, f"Пустой граф требует n >= 1, получено {n}")
    return make_graph(n, [], name=f"co-K{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    _require(m >= 1 and n >= 1, f"K_(m,n) требует m, n >= 1, получено ({m}, {n})")
    edges = [(a, m + b) for a in range(m) for b in range(n)]
    return make_graph(m + n, edges, name=f"K{m},{n}")


def prism(n: int) -> Graph:
    """K_n × K_2: две копии K_n и ступени i⁺ - i⁻"""
    _require(n >= 1, f"Призма требует n >= 1, получено {n}")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((i, j))
            edges.append((n + i, n + j))
        edges.append((i, n + i))
    return make_graph(2 * n, edges, name=f"Prism{n}")


def grid(m: int, n: int) -> Graph:
    """Декартово произведение путей P_m × P_n, вершины построчно"""
    _require(m >= 1 and n >= 1, f"Решетка требует m, n >= 1, получено ({m}, {n})")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                edges.append((v, v + 1))
            if i + 1 < m:
                edges.append((v, v + n))
    return make_graph(m * n, edges, name=f"G({m},{n})")


def squared_cycle(n: int) -> Graph:
    """W_n: цикл плюс хорды на расстоянии 2 (при n <= 5 это K_n)"""
    _require(n >= 3, f"Квадрат цикла требует n >= 3, получено {n}")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, (i + 2) % n) for i in range(n)]
    return make_graph(n, edges, name=f"W{n}")


def square_with_pendants() -> Graph:
    """Квадрат a-b-c-d с двумя висячими вершинами e, f при d (a..f -> 0..5)"""
    return make_graph(6, [(3, 0), (0, 1), (1, 2), (2, 3), (3, 4), (3, 5)], name="square_with_pendants")


# Генераторы и их арность
_BUILDERS = {
    GraphFamily.PATH: (path, 1),
    GraphFamily.CYCLE: (cycle, 1),
    GraphFamily.COMPLETE: (complete, 1),
    GraphFamily.EDGELESS: (edgeless, 1),
    GraphFamily.COMPLETE_BIPARTITE: (complete_bipartite, 2),
    GraphFamily.PRISM: (prism, 1),
    GraphFamily.GRID: (grid, 2),
    GraphFamily.SQUARED_CYCLE: (squared_cycle, 1),
    GraphFamily.SQUARE_WITH_PENDANTS: (square_with_pendants, 0),
}

# Короткие имена для командной строки
_ALIASES = {
    "p": GraphFamily.PATH,
    "c": GraphFamily.CYCLE,
    "kn": GraphFamily.COMPLETE,
    "k": GraphFamily.COMPLETE,
    "empty": GraphFamily.EDGELESS,
    "kmn": GraphFamily.COMPLETE_BIPARTITE,
    "bipartite": GraphFamily.COMPLETE_BIPARTITE,
    "wn": GraphFamily.SQUARED_CYCLE,
    "w": GraphFamily.SQUARED_CYCLE,
    "sqp": GraphFamily.SQUARE_WITH_PENDANTS,
}


def family(kind: GraphFamily, *params: int) -> Graph:
    """Граф семейства kind с параметрами params"""
    builder, arity = _BUILDERS[kind]
    if len(params) != arity:
        raise InvalidInputError(
            f"Семейство {kind.value} ожидает {arity} параметр(а), получено {len(params)}"
        )
    return builder(*params)


def parse_family_spec(spec: str) -> tuple[GraphFamily, list[int]]:
    """
    Разбирает строку "имя:p1,p2", например "grid:3,4", "prism:5", "wn:9", "kmn:2,3".
    """
    name, _, raw_params = spec.strip().partition(":")
    name = name.strip().lower()
    kind = _ALIASES.get(name) or to_enum(GraphFamily, name, "семейства графов")
    try:
        params = [int(p) for p in raw_params.split(",") if p.strip()]
    except ValueError:
        raise InvalidInputError(f"Параметры графа должны быть целыми числами: {spec!r}")
    return kind, params


def parse_graph_spec(spec: str) -> Graph:
    kind, params = parse_family_spec(spec)
    return family(kind, *params)


def random_chordal_graph(n: int, rng: np.random.Generator, attach_probability: float = 0.8) -> Graph:
    """
    Случайный хордальный граф, построенный по явному порядку исключения.

    Вершины добавляются по одной; новая вершина соединяется с кликой уже
    построенного графа, поэтому она симплициальна в момент добавления.
    Обращенный порядок добавления - совершенный порядок исключения.
    """
    _require(n >= 1, f"Хордальный граф требует n >= 1, получено {n}")
    adj = [0] * n
    for v in range(1, n):
        if rng.random() > attach_probability:
            continue
        anchor = int(rng.integers(0, v))
        clique = 1 << anchor
        candidates = [int(u) for u in rng.permutation(list(iter_bits(adj[anchor])))]
        for u in candidates:
            if clique & ~adj[u] == 0 and rng.random() < 0.5:
                clique |= 1 << u
        for u in iter_bits(clique):
            adj[u] |= 1 << v
        adj[v] = clique
    edges = [(i, j) for i in range(n) for j in iter_bits(adj[i]) if i < j]
    return make_graph(n, edges, name=f"chordal{n}")


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Случайное дерево: вершина v присоединяется к случайной более ранней"""
    _require(n >= 1, f"Дерево требует n >= 1, получено {n}")
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    return make_graph(n, edges, name=f"tree{n}")


def family_name(kind: GraphFamily, params: tuple[int, ...]) -> str:
    return f"{kind.value}:{','.join(str(p) for p in params)}"

