"""
Точные структурные процедуры: вершинная разложимость, поиск шеллинга,
препятствия к шеллингуемости и сертификаты стягиваемости.
"""

from typing import Optional, Sequence

import logging

from core.config import settings
from core.errors import InvalidInputError, ResourceCapExceeded
from domain.bitsets import bits_of, is_subset, iter_bits
from domain.complexes import SimplicialComplex, deletion, link
from models.certificate import CertificateKind, ContractibilityKind
from schemas.decide import (
    ContractibilityCertificate,
    DecompositionNode,
    ShellingObstruction,
    ShellingResult,
    VertexDecomposability,
)
from schemas.homology import BettiReport
from services.morse import MorseEngine, get_morse_engine, lex_schedule

logger = logging.getLogger(__name__)


class DecisionEngine:
    """Решающие процедуры для комплексов малого размера"""

    def __init__(
        self,
        vd_face_cap: Optional[int] = None,
        facet_cap: Optional[int] = None,
        morse: Optional[MorseEngine] = None,
    ):
        self.vd_face_cap = vd_face_cap or settings.CUTCOMPLEX_VD_FACE_CAP
        self.facet_cap = facet_cap or settings.CUTCOMPLEX_FACET_CAP
        self.morse = morse or get_morse_engine()

    def is_vertex_decomposable(self, delta: SimplicialComplex) -> VertexDecomposability:
        """
        Вершинная разложимость (чистая версия определения).

        Симплекс, {∅} и void разложимы. Иначе нужна вершина v, для
        которой линк и удаление разложимы, а удаление чистое той же
        размерности. Результаты запоминаются по набору фасет.

        :raises ResourceCapExceeded: Если число граней превышает лимит
        """
        if not delta.is_void:
            delta.face_index(self.vd_face_cap)
        if not delta.is_pure():
            return VertexDecomposability(decomposable=False, reason="комплекс не чистый")

        memo: dict[tuple[int, ...], Optional[DecompositionNode]] = {}

        def decompose(current: SimplicialComplex) -> Optional[DecompositionNode]:
            key = current.facets
            if key in memo:
                return memo[key]
            if current.is_void:
                result = DecompositionNode(base="void")
            elif current.is_empty_face:
                result = DecompositionNode(base="empty_face")
            elif current.num_facets == 1:
                result = DecompositionNode(base="simplex")
            else:
                result = None
                top = current.dimension
                for v in iter_bits(current.vertices()):
                    rest = deletion(current, 1 << v)
                    if not rest.is_pure() or rest.dimension != top:
                        continue
                    rest_node = decompose(rest)
                    if rest_node is None:
                        continue
                    link_node = decompose(link(current, 1 << v))
                    if link_node is None:
                        continue
                    result = DecompositionNode(vertex=v, link=link_node, deletion=rest_node)
                    break
            memo[key] = result
            return result

        tree = decompose(delta)
        logger.debug("Вершинная разложимость: %s (состояний %d)", tree is not None, len(memo))
        if tree is None:
            return VertexDecomposability(decomposable=False, reason="нет теневой вершины")
        return VertexDecomposability(decomposable=True, tree=tree)

    def find_shelling(self, delta: SimplicialComplex, facet_cap: Optional[int] = None) -> ShellingResult:
        """
        Поиск шеллинга перебором с возвратом.

        Условие для очередной фасеты зависит только от множества уже
        поставленных фасет, поэтому тупиковые множества запоминаются.

        :raises ResourceCapExceeded: Если фасет больше facet_cap
        """
        cap = facet_cap or self.facet_cap
        facets = delta.facets
        m = len(facets)
        if m > cap:
            raise ResourceCapExceeded("число фасет", m, cap)
        if m <= 1:
            return ShellingResult(shellable=True, order=[bits_of(face) for face in facets])

        meets = [[a & b for b in facets] for a in facets]
        sizes = [face.bit_count() for face in facets]
        full = (1 << m) - 1
        dead: set[int] = set()
        order: list[int] = []

        def fits(j: int, placed: int) -> bool:
            target = sizes[j] - 1
            previous = [meets[i][j] for i in iter_bits(placed)]
            ridges = [meet for meet in previous if meet.bit_count() == target]
            if not ridges:
                return False
            return all(any(is_subset(meet, ridge) for ridge in ridges) for meet in previous)

        def extend(placed: int) -> bool:
            if placed == full:
                return True
            if placed in dead:
                return False
            for j in range(m):
                if placed >> j & 1:
                    continue
                if placed and not fits(j, placed):
                    continue
                order.append(j)
                if extend(placed | 1 << j):
                    return True
                order.pop()
            dead.add(placed)
            return False

        if not extend(0):
            logger.debug("Шеллинг не найден: %d фасет, тупиков %d", m, len(dead))
            return ShellingResult(shellable=False)
        return ShellingResult(shellable=True, order=[bits_of(facets[j]) for j in order])

    def non_shellability_obstruction(
        self,
        delta: SimplicialComplex,
        betti: BettiReport,
    ) -> Optional[ShellingObstruction]:
        """
        Препятствие: у чистого шеллингуемого комплекса размерности d
        приведенная гомология сосредоточена в размерности d.

        Отсутствие препятствия ничего не доказывает.
        """
        if not delta.is_pure():
            raise InvalidInputError("Препятствие определено только для чистого комплекса")
        if delta.is_void or betti.void:
            return None
        top = delta.dimension
        for d in sorted(betti.betti):
            if d < top and betti.betti[d]:
                return ShellingObstruction(
                    dimension=d,
                    betti=betti.betti[d],
                    top_dimension=top,
                    reason=f"β_{d} = {betti.betti[d]} при размерности комплекса {top}",
                )
        return None

    def contractibility_certificate(self, delta: SimplicialComplex) -> Optional[ContractibilityCertificate]:
        """Одна фасета, конус или лексикографическое паросочетание без критических клеток"""
        if delta.is_void or delta.is_empty_face:
            return None
        if delta.num_facets == 1:
            return ContractibilityCertificate(kind=ContractibilityKind.SINGLE_FACET)
        common = delta.facets[0]
        for face in delta.facets[1:]:
            common &= face
        if common:
            return ContractibilityCertificate(kind=ContractibilityKind.CONE, vertex=bits_of(common)[0])
        schedule = lex_schedule(delta)
        try:
            matching = self.morse.element_matching_sequence(delta, schedule)
        except ResourceCapExceeded as e:
            logger.info("Сертификат стягиваемости пропущен: %s", e)
            return None
        report = self.morse.morse_report(delta, matching, verify=False)
        if report.certificate is CertificateKind.CONTRACTIBLE and report.empty_matched:
            return ContractibilityCertificate(kind=ContractibilityKind.MORSE_POINT, schedule=schedule)
        return None


def is_shelling_order(delta: SimplicialComplex, order: Sequence[int]) -> bool:
    """Проверяет, что order (маски фасет) - шеллинг комплекса delta"""
    if sorted(order) != sorted(delta.facets) or len(set(order)) != len(order):
        return False
    for j in range(1, len(order)):
        current = order[j]
        previous = [current & order[i] for i in range(j)]
        ridges = [meet for meet in previous if meet.bit_count() == current.bit_count() - 1]
        if not ridges:
            return False
        if not all(any(is_subset(meet, ridge) for ridge in ridges) for meet in previous):
            return False
    return True


# Глобальный экземпляр движка
_decision_engine_instance = None


def get_decision_engine() -> DecisionEngine:
    """Получает глобальный экземпляр решающих процедур"""
    global _decision_engine_instance
    if _decision_engine_instance is None:
        _decision_engine_instance = DecisionEngine()
    return _decision_engine_instance
