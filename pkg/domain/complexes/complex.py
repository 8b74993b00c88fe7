"""
Симплициальные комплексы, заданные фасетами.

Комплекс хранит размер носителя n и антицепь фасет (битовые маски,
отсортированные по возрастанию). Полный список граней строится лениво
один раз и дальше только читается.

Три вида комплексов:
  - void: нет ни одной грани, даже пустой (фасет нет);
  - empty_face: единственная грань - пустое множество (фасета 0);
  - ordinary: все остальные.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

import logging
import threading

from core.config import settings
from core.errors import InvalidInputError, ResourceCapExceeded
from domain.bitsets import full_mask, iter_bits, is_subset, format_mask
from models.complex import ComplexKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FaceIndex:
    """
    Все грани комплекса, разложенные по размеру.

    levels[s] - отсортированный кортеж граней из s вершин (размерность s-1),
    поэтому f_vector[0] - число пустых граней (1 для непустого комплекса).
    """

    levels: tuple[tuple[int, ...], ...]

    @property
    def f_vector(self) -> list[int]:
        return [len(level) for level in self.levels]

    @property
    def total(self) -> int:
        return sum(len(level) for level in self.levels)

    def positions(self, size: int) -> dict[int, int]:
        """Номер грани внутри своего уровня"""
        return {face: i for i, face in enumerate(self.levels[size])}

    def all_faces(self) -> list[int]:
        return [face for level in self.levels for face in level]


class SimplicialComplex:
    """Комплекс на носителе {0..ground-1}, заданный антицепью фасет"""

    __slots__ = ("ground", "facets", "_index", "_lock")

    def __init__(self, ground: int, facets: tuple[int, ...]):
        # Конструктор не нормализует вход: используйте from_facets
        self.ground = ground
        self.facets = facets
        self._index: Optional[FaceIndex] = None
        self._lock = threading.Lock()

    @classmethod
    def from_facets(cls, n: int, candidates: Iterable[int]) -> "SimplicialComplex":
        """
        Нормализует кандидатов в фасеты.

        Дубликаты удаляются, кандидаты внутри других поглощаются.
        Пустой вход дает void, вход {∅} дает комплекс из пустой грани.
        """
        if n < 0:
            raise InvalidInputError(f"Размер носителя не может быть отрицательным: {n}")
        full = full_mask(n)
        unique = set()
        for candidate in candidates:
            if candidate < 0 or not is_subset(candidate, full):
                raise InvalidInputError(
                    f"Фасета {format_mask(candidate)} выходит за носитель 0..{n - 1}"
                )
            unique.add(candidate)

        sizes = {face.bit_count() for face in unique}
        if len(sizes) <= 1:
            return cls(n, tuple(sorted(unique)))

        kept: list[int] = []
        for face in sorted(unique, key=lambda f: (-f.bit_count(), f)):
            if not any(is_subset(face, bigger) for bigger in kept):
                kept.append(face)
        return cls(n, tuple(sorted(kept)))

    @classmethod
    def void(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def empty_face(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, (0,))

    @property
    def kind(self) -> ComplexKind:
        if not self.facets:
            return ComplexKind.VOID
        if self.facets == (0,):
            return ComplexKind.EMPTY_FACE
        return ComplexKind.ORDINARY

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_face(self) -> bool:
        return self.facets == (0,)

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    @property
    def dimension(self) -> Optional[int]:
        """max |F| - 1; для void размерность не определена (None)"""
        if not self.facets:
            return None
        return max(face.bit_count() for face in self.facets) - 1

    def is_pure(self) -> bool:
        return len({face.bit_count() for face in self.facets}) <= 1

    def vertices(self) -> int:
        mask = 0
        for face in self.facets:
            mask |= face
        return mask

    def contains_face(self, sigma: int) -> bool:
        return any(is_subset(sigma, face) for face in self.facets)

    def face_index(self, cap: Optional[int] = None) -> FaceIndex:
        """
        Ленивый индекс граней с проверкой лимита.

        Строится под блокировкой, поэтому параллельные читатели видят
        один и тот же согласованный индекс.
        """
        cap = settings.CUTCOMPLEX_FACE_CAP if cap is None else cap
        with self._lock:
            if self._index is None:
                self._index = self._build_index(cap)
            index = self._index
        if index.total > cap:
            raise ResourceCapExceeded("число граней", index.total, cap)
        return index

    def _build_index(self, cap: int) -> FaceIndex:
        if not self.facets:
            return FaceIndex(levels=())
        top = max(face.bit_count() for face in self.facets)
        levels: list[set[int]] = [set() for _ in range(top + 1)]
        for face in self.facets:
            levels[face.bit_count()].add(face)

        total = 0
        for size in range(top, 0, -1):
            current = levels[size]
            total += len(current)
            below = levels[size - 1]
            for face in current:
                rest = face
                while rest:
                    low = rest & -rest
                    below.add(face ^ low)
                    rest ^= low
                if total + len(below) > cap:
                    raise ResourceCapExceeded(
                        "число граней", total + len(below), cap, detail=f"носитель {self.ground}"
                    )
        levels_sorted = tuple(tuple(sorted(level)) for level in levels)
        logger.debug("Индекс граней построен: f = %s", [len(level) for level in levels_sorted])
        return FaceIndex(levels=levels_sorted)

    def f_vector(self, cap: Optional[int] = None) -> list[int]:
        """Число граней по размерностям -1, 0, 1, ... (void дает пустой список)"""
        return self.face_index(cap).f_vector

    def faces(self, d: int, cap: Optional[int] = None) -> list[int]:
        """Грани размерности d в порядке возрастания масок"""
        if self.is_void:
            raise InvalidInputError("У void-комплекса нет граней")
        if d < -1:
            raise InvalidInputError(f"Размерность грани должна быть >= -1, получено {d}")
        levels = self.face_index(cap).levels
        if d + 1 >= len(levels):
            return []
        return list(levels[d + 1])

    def ridges_with_facet_counts(self) -> list[tuple[int, int]]:
        """Гребни чистого комплекса и число фасет, содержащих каждый"""
        if self.is_void:
            raise InvalidInputError("У void-комплекса нет гребней")
        if not self.is_pure():
            raise InvalidInputError("Гребни определены только для чистого комплекса")
        counts: Counter[int] = Counter()
        for face in self.facets:
            rest = face
            while rest:
                low = rest & -rest
                counts[face ^ low] += 1
                rest ^= low
        return sorted(counts.items())

    def facet_lists(self) -> list[list[int]]:
        return [list(iter_bits(face)) for face in self.facets]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ground == other.ground and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.ground, self.facets))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(n={self.ground}, void)"
        shown = ", ".join(format_mask(face) for face in self.facets[:8])
        more = "" if len(self.facets) <= 8 else f", ... ({len(self.facets)} фасет)"
        return f"SimplicialComplex(n={self.ground}, [{shown}{more}])"
