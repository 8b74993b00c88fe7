"""
Текстовый формат графа: первая строка "n m", затем m строк "i j" (0-базные).

Пустые строки и строки, начинающиеся с "#", игнорируются.
"""

from pathlib import Path

from core.errors import InvalidInputError
from .graph import Graph, make_graph
from .families import parse_graph_spec


def parse_graph_text(text: str, name: str | None = None) -> Graph:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise InvalidInputError("Пустое описание графа")
    try:
        header = [int(x) for x in lines[0].split()]
        if len(header) != 2:
            raise InvalidInputError(f"Первая строка должна быть 'n m', получено {lines[0]!r}")
        n, m = header
        edges = []
        for line in lines[1:]:
            parts = [int(x) for x in line.split()]
            if len(parts) != 2:
                raise InvalidInputError(f"Строка ребра должна быть 'i j', получено {line!r}")
            edges.append((parts[0], parts[1]))
    except ValueError as e:
        if isinstance(e, InvalidInputError):
            raise
        raise InvalidInputError(f"Некорректное число в описании графа: {e}")
    if len(edges) != m:
        raise InvalidInputError(f"Заявлено ребер: {m}, прочитано: {len(edges)}")
    return make_graph(n, edges, name=name)


def format_graph_text(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{i} {j}" for i, j in edges]
    return "\n".join(lines) + "\n"


def load_graph(source: str) -> Graph:
    """
    Граф из файла (если такой путь существует) или из спецификации семейства.
    """
    path = Path(source)
    if path.is_file():
        return parse_graph_text(path.read_text(encoding="utf-8"), name=path.stem)
    return parse_graph_spec(source)
