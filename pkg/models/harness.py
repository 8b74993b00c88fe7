from typing import Optional

import enum

from core.errors import InvalidInputError


class SuiteId(str, enum.Enum):
    """Наборы проверок утверждений"""
    RIDGE_FACET = "ridge_facet"
    ISOLATED_DECOMPOSITION = "isolated_decomposition"
    LINK_LEMMA = "link_lemma"
    DELETION_LEMMA = "deletion_lemma"
    SUSPENSION = "suspension"
    LES_EULER = "les_euler"
    EDGELESS = "edgeless"
    BIPARTITE = "bipartite"
    PRISM = "prism"
    CHORDAL = "chordal"
    TREES = "trees"
    CYCLES = "cycles"
    GRID = "grid"
    SQUARED_CYCLE = "squared_cycle"
    REALIZABILITY = "realizability"
    ORACLE = "oracle"


class GraphFamily(str, enum.Enum):
    """Семейства графов с генераторами"""
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EDGELESS = "edgeless"
    COMPLETE_BIPARTITE = "complete_bipartite"
    PRISM = "prism"
    GRID = "grid"
    SQUARED_CYCLE = "squared_cycle"
    SQUARE_WITH_PENDANTS = "square_with_pendants"


class ConjectureId(str, enum.Enum):
    """Гипотезы, для которых есть свип"""
    SQUARED_CYCLE = "squared_cycle"
    GRID_K = "grid_k"


class TableFamily(str, enum.Enum):
    """Семейства решеток G(m, n) для таблиц чисел Бетти"""
    G2N = "G2n"
    G3N = "G3n"
    G4N = "G4n"

    @property
    def rows(self) -> int:
        return int(self.value[1])


class TableFormat(str, enum.Enum):
    TEXT = "text"
    CSV = "csv"
    MD = "md"
    JSON = "json"


class CheckProperty(str, enum.Enum):
    """Структурные свойства для команды check"""
    VD = "vd"
    SHELLING = "shelling"
    OBSTRUCTION = "obstruction"
    CONTRACTIBLE = "contractible"


class ScheduleFamily(str, enum.Enum):
    """Семейства, для которых известно расписание элементных паросочетаний"""
    BIPARTITE = "bipartite"
    PRISM = "prism"
    CYCLE = "cycle"
    GRID = "grid"
    SQUARED_CYCLE = "squared_cycle"
    PATH = "path"


def to_enum(enum_cls: type[enum.Enum], raw: Optional[str], what: str):
    """
    Конвертирует строку в значение перечисления.

    В отличие от мягких конвертеров, неизвестное значение - это отказ:
    выбрасывает InvalidInputError со списком допустимых значений.
    """
    if raw is None:
        raise InvalidInputError(f"Не указано значение: {what}")
    norm = raw.strip()
    for member in enum_cls:
        if member.value.lower() == norm.lower():
            return member
    raise InvalidInputError(
        f"Неизвестное значение {what}: {raw!r}. Доступные значения: {[m.value for m in enum_cls]}"
    )
