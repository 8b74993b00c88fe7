"""
Текстовый формат комплекса: первая строка n, затем по фасете на строку
(номера вершин через пробел). Строка "-" обозначает комплекс из пустой
грани, отсутствие фасет (или пустой файл) - void.
"""

from pathlib import Path

from core.errors import InvalidInputError
from domain.bitsets import iter_bits, mask_of
from .complex import SimplicialComplex


def parse_complex_text(text: str) -> SimplicialComplex:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        return SimplicialComplex.void(0)
    try:
        n = int(lines[0])
        facets = []
        for line in lines[1:]:
            if line == "-":
                facets.append(0)
            else:
                facets.append(mask_of(int(v) for v in line.split()))
    except ValueError as e:
        raise InvalidInputError(f"Некорректное описание комплекса: {e}")
    return SimplicialComplex.from_facets(n, facets)


def format_complex_text(delta: SimplicialComplex) -> str:
    lines = [str(delta.ground)]
    for face in delta.facets:
        lines.append(" ".join(str(v) for v in iter_bits(face)) if face else "-")
    return "\n".join(lines) + "\n"


def load_complex(path: str) -> SimplicialComplex:
    return parse_complex_text(Path(path).read_text(encoding="utf-8"))


def save_complex(delta: SimplicialComplex, path: str) -> None:
    Path(path).write_text(format_complex_text(delta), encoding="utf-8")
