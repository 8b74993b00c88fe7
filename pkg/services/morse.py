"""
Дискретная теория Морса: последовательные элементные паросочетания,
проверка ацикличности и вывод о гомотопическом типе по критическим клеткам.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

import logging

from core.config import settings
from core.errors import InvalidInputError
from domain.bitsets import bits_of, format_mask
from domain.complexes import SimplicialComplex
from models.certificate import CertificateKind
from models.harness import GraphFamily, ScheduleFamily, to_enum
from schemas.homology import BettiReport
from schemas.morse import MorseReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matching:
    """
    Результат последовательности элементных паросочетаний.

    pairs - пары (σ, σ ∪ {x}); critical - непарные грани, пустая грань
    включается, если осталась непарной.
    """

    schedule: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...] = field(default=())
    critical: tuple[int, ...] = field(default=())

    @property
    def empty_matched(self) -> bool:
        return 0 not in self.critical

    @classmethod
    def empty(cls) -> "Matching":
        return cls(schedule=())


class MorseEngine:
    """Элементные паросочетания и сертификаты Морса"""

    def __init__(self, face_cap: Optional[int] = None):
        self.face_cap = face_cap or settings.CUTCOMPLEX_FACE_CAP

    def element_matching_sequence(self, delta: SimplicialComplex, schedule: Sequence[int]) -> Matching:
        """
        Раунд i сопоставляет σ и σ ∪ {x_i} среди граней, переживших
        предыдущие раунды. Пустая грань участвует наравне с остальными.

        :raises InvalidInputError: Повтор вершины или вершина вне носителя
        """
        schedule = tuple(int(x) for x in schedule)
        if len(set(schedule)) != len(schedule):
            raise InvalidInputError(f"В расписании есть повторяющиеся вершины: {list(schedule)}")
        for x in schedule:
            if not 0 <= x < delta.ground:
                raise InvalidInputError(f"Вершина {x} расписания вне носителя 0..{delta.ground - 1}")
        if delta.is_void:
            return Matching(schedule=schedule)

        alive = set(delta.face_index(self.face_cap).all_faces())
        pairs: list[tuple[int, int]] = []
        for x in schedule:
            bit = 1 << x
            round_pairs = [
                (face, face | bit)
                for face in alive
                if not face & bit and face | bit in alive
            ]
            for lower, upper in round_pairs:
                alive.discard(lower)
                alive.discard(upper)
            round_pairs.sort()
            pairs.extend(round_pairs)
            logger.debug("Раунд x=%d: %d пар, осталось %d граней", x, len(round_pairs), len(alive))

        critical = tuple(sorted(alive, key=lambda face: (face.bit_count(), face)))
        return Matching(schedule=schedule, pairs=tuple(pairs), critical=critical)

    def verify_acyclic(self, delta: SimplicialComplex, matching: Matching) -> bool:
        """
        Нет цикла a₁ ≺ u(a₁) ≻ a₂ ≺ u(a₂) ... ≻ a₁.

        Поиск в глубину по нижним элементам пар: a → a', если a' ≺ u(a),
        a' ≠ a и a' сама сопоставлена вверх.

        :raises InvalidInputError: Пара не является отношением покрытия или грань встречается дважды
        """
        up: dict[int, int] = {}
        seen: set[int] = set()
        for lower, upper in matching.pairs:
            diff = upper & ~lower
            if lower & ~upper or diff.bit_count() != 1:
                raise InvalidInputError(
                    f"Пара ({format_mask(lower)}, {format_mask(upper)}) не является покрытием"
                )
            if not delta.contains_face(upper):
                raise InvalidInputError(f"{format_mask(upper)} не является гранью комплекса")
            if lower in seen or upper in seen:
                raise InvalidInputError("Грань входит более чем в одну пару")
            seen.add(lower)
            seen.add(upper)
            up[lower] = upper

        def successors(a: int) -> list[int]:
            u = up[a]
            result = []
            rest = u
            while rest:
                low = rest & -rest
                other = u ^ low
                if other != a and other in up:
                    result.append(other)
                rest ^= low
            return result

        # 0 - не посещена, 1 - в стеке, 2 - обработана
        state: dict[int, int] = {}
        for start in up:
            if state.get(start):
                continue
            stack = [(start, iter(successors(start)))]
            state[start] = 1
            while stack:
                node, children = stack[-1]
                child = next(children, None)
                if child is None:
                    state[node] = 2
                    stack.pop()
                    continue
                status = state.get(child, 0)
                if status == 1:
                    logger.info("Найден цикл паросочетания через %s", format_mask(child))
                    return False
                if status == 0:
                    state[child] = 1
                    stack.append((child, iter(successors(child))))
        return True

    def morse_report(
        self,
        delta: SimplicialComplex,
        matching: Matching,
        betti: Optional[BettiReport] = None,
        verify: bool = True,
    ) -> MorseReport:
        """
        Перепись критических клеток и сертификат.

        Букет сфер выдается только при сопоставленной пустой грани и
        критических клетках в одной размерности; точка - при нуле
        критических клеток или при единственной критической вершине
        с непарной пустой гранью.

        :raises InvalidInputError: Паросочетание не ациклично
        """
        if verify and not self.verify_acyclic(delta, matching):
            raise InvalidInputError("Паросочетание не ациклично")

        cells: dict[int, int] = {}
        for face in matching.critical:
            if face:
                d = face.bit_count() - 1
                cells[d] = cells.get(d, 0) + 1
        empty_matched = not delta.is_void and matching.empty_matched

        report = MorseReport(
            schedule=list(matching.schedule),
            matched_pairs=len(matching.pairs),
            cells_per_dim=dict(sorted(cells.items())),
            empty_matched=empty_matched,
            critical_faces=[bits_of(face) for face in matching.critical],
            acyclic=True if verify else None,
        )

        if delta.is_void:
            report.certificate = CertificateKind.INCONCLUSIVE
        elif empty_matched and not cells:
            report.certificate = CertificateKind.CONTRACTIBLE
        elif not empty_matched and cells == {0: 1}:
            report.certificate = CertificateKind.CONTRACTIBLE
        elif empty_matched and len(cells) == 1:
            (d, count), = cells.items()
            report.certificate = CertificateKind.WEDGE_OF_SPHERES
            report.sphere_dim = d
            report.sphere_count = count

        if betti is not None and not betti.void:
            report.morse_inequalities_ok = all(
                self._cells_at(report, d) >= value for d, value in betti.betti.items()
            )
            if not report.morse_inequalities_ok:
                logger.warning("Нарушены неравенства Морса: c = %s, β = %s", cells, betti.nonzero())
        return report

    @staticmethod
    def _cells_at(report: MorseReport, d: int) -> int:
        if d == -1:
            return 0 if report.empty_matched else 1
        return report.cells_per_dim.get(d, 0)


def critical_euler(report: MorseReport) -> int:
    """
    Σ (-1)^i c_i по i >= 0.

    Совпадает с приведенной эйлеровой характеристикой плюс 1, если пустая
    грань осталась непарной.
    """
    return sum(count if d % 2 == 0 else -count for d, count in report.cells_per_dim.items())


def lex_schedule(delta: SimplicialComplex) -> list[int]:
    """Все вершины носителя по возрастанию"""
    return list(range(delta.ground))


def preset_schedule(family: ScheduleFamily | str, params: Sequence[int]) -> list[int]:
    """
    Расписание вершин из доказательств для семейств (0-базная нумерация):
      - bipartite (m, n): [a₁, b₁] = [0, m];
      - prism (n): [1⁺, 1⁻] = [0, n];
      - cycle (n, k): вершины 0..n-2k+1;
      - grid (m, n): вершины 0..(m-1)n-1;
      - squared_cycle (n): вершины 0..n-4 и затем n-2;
      - path (n): все вершины слева направо.
    """
    if isinstance(family, str):
        family = to_enum(ScheduleFamily, family, "семейства расписания")
    params = [int(p) for p in params]
    arity = {
        ScheduleFamily.BIPARTITE: 2,
        ScheduleFamily.PRISM: 1,
        ScheduleFamily.CYCLE: 2,
        ScheduleFamily.GRID: 2,
        ScheduleFamily.SQUARED_CYCLE: 1,
        ScheduleFamily.PATH: 1,
    }[family]
    if len(params) != arity:
        raise InvalidInputError(f"Расписание {family.value} ожидает {arity} параметр(а), получено {params}")

    if family is ScheduleFamily.BIPARTITE:
        m, _ = params
        return [0, m]
    if family is ScheduleFamily.PRISM:
        (n,) = params
        return [0, n]
    if family is ScheduleFamily.CYCLE:
        n, k = params
        return list(range(max(0, n - 2 * k + 2)))
    if family is ScheduleFamily.GRID:
        m, n = params
        return list(range((m - 1) * n))
    if family is ScheduleFamily.SQUARED_CYCLE:
        (n,) = params
        if n < 4:
            raise InvalidInputError(f"Расписание квадрата цикла требует n >= 4, получено {n}")
        return list(range(n - 3)) + [n - 2]
    (n,) = params
    return list(range(n))


# Соответствие семейств графов семействам расписаний
_PRESET_FOR_GRAPH = {
    GraphFamily.COMPLETE_BIPARTITE: ScheduleFamily.BIPARTITE,
    GraphFamily.PRISM: ScheduleFamily.PRISM,
    GraphFamily.CYCLE: ScheduleFamily.CYCLE,
    GraphFamily.GRID: ScheduleFamily.GRID,
    GraphFamily.SQUARED_CYCLE: ScheduleFamily.SQUARED_CYCLE,
    GraphFamily.PATH: ScheduleFamily.PATH,
}


def preset_for_graph(kind: GraphFamily, params: Sequence[int], k: int) -> list[int]:
    """Расписание для графа семейства kind; циклу дополнительно нужен k"""
    family = _PRESET_FOR_GRAPH.get(kind)
    if family is None:
        raise InvalidInputError(f"Для семейства {kind.value} нет готового расписания")
    if family is ScheduleFamily.CYCLE:
        return preset_schedule(family, [*params, k])
    return preset_schedule(family, params)


# Глобальный экземпляр движка
_morse_engine_instance = None


def get_morse_engine() -> MorseEngine:
    """Получает глобальный экземпляр движка Морса"""
    global _morse_engine_instance
    if _morse_engine_instance is None:
        _morse_engine_instance = MorseEngine()
    return _morse_engine_instance
