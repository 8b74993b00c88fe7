"""
Точная приведенная гомология симплициальных комплексов над ℚ.

Ранги граничных отображений считаются редукцией столбцов по модулю двух
простых чисел (с очисткой столбцов, уже известных как зависимые); при
расхождении ранг пересчитывается точно над ℚ через sympy. Отдельный
оракул считает нормальную форму Смита над ℤ и находит кручение.
"""

from dataclasses import dataclass
from typing import Iterator, Optional

import logging

from sympy import Matrix, QQ, ZZ, factorint
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.matrices import DomainMatrix

from core.config import settings
from domain.complexes import FaceIndex, SimplicialComplex
from schemas.homology import BettiReport

logger = logging.getLogger(__name__)

# Простые числа для модульных рангов
PRIME_62 = 2 ** 62 - 57
PRIME_61 = 2 ** 61 - 1

Column = list[tuple[int, int]]


@dataclass(frozen=True)
class BoundaryMatrix:
    """
    ∂_d: столбцы - d-грани, строки - (d-1)-грани.

    Знак при удалении вершины, стоящей на позиции j в отсортированной
    грани, равен (-1)^j. ∂_0 - аугментация в пустую грань.
    """

    dim: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    columns: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dict_of_dicts(self) -> dict[int, dict[int, int]]:
        """Разреженное представление по строкам: {строка: {столбец: значение}}"""
        result: dict[int, dict[int, int]] = {}
        for j, column in enumerate(self.columns):
            for i, value in column:
                result.setdefault(i, {})[j] = value
        return result


def _boundary_columns(index: FaceIndex, d: int) -> Iterator[Column]:
    row_position = index.positions(d)
    for face in index.levels[d + 1]:
        column = []
        rest = face
        position = 0
        while rest:
            low = rest & -rest
            column.append((row_position[face ^ low], -1 if position & 1 else 1))
            rest ^= low
            position += 1
        yield column


def _reduce_mod_p(columns: Iterator[Column], p: int, cleared: set[int]) -> tuple[int, set[int]]:
    """
    Ранг по модулю p редукцией столбцов слева направо.

    Столбцы из cleared заранее известны как линейные комбинации
    предыдущих и пропускаются. Возвращает ранг и множество опорных строк.
    """
    pivots: dict[int, dict[int, int]] = {}
    for j, column in enumerate(columns):
        if j in cleared:
            continue
        vector = {i: value % p for i, value in column}
        while vector:
            low = max(vector)
            pivot = pivots.get(low)
            if pivot is None:
                break
            factor = vector[low]
            for i, value in pivot.items():
                updated = (vector.get(i, 0) - factor * value) % p
                if updated:
                    vector[i] = updated
                else:
                    vector.pop(i, None)
        if vector:
            low = max(vector)
            inverse = pow(vector[low], -1, p)
            pivots[low] = {i: value * inverse % p for i, value in vector.items()}
    return len(pivots), set(pivots)


def _rank_over_rationals(matrix: BoundaryMatrix) -> int:
    rows, cols = matrix.shape
    if not rows or not cols:
        return 0
    entries = {i: {j: QQ(v) for j, v in row.items()} for i, row in matrix.to_dict_of_dicts().items()}
    return DomainMatrix(entries, (rows, cols), QQ).rank()


class HomologyEngine:
    """Вычисление приведенных чисел Бетти и проверка кручения"""

    def __init__(self, face_cap: Optional[int] = None, snf_face_cap: Optional[int] = None):
        """
        :param face_cap: Лимит числа граней для betti() (по умолчанию из настроек)
        :param snf_face_cap: Лимит числа граней для SNF-оракула
        """
        self.face_cap = face_cap or settings.CUTCOMPLEX_FACE_CAP
        self.snf_face_cap = snf_face_cap or settings.CUTCOMPLEX_SNF_FACE_CAP

    def boundary_matrix(self, delta: SimplicialComplex, d: int) -> BoundaryMatrix:
        index = delta.face_index(self.face_cap)
        levels = index.levels
        if d < 0 or d + 1 >= len(levels):
            rows = levels[d] if 0 <= d < len(levels) else ()
            return BoundaryMatrix(dim=d, rows=tuple(rows), cols=(), columns=())
        columns = tuple(tuple(column) for column in _boundary_columns(index, d))
        return BoundaryMatrix(dim=d, rows=levels[d], cols=levels[d + 1], columns=columns)

    def compose_is_zero(self, delta: SimplicialComplex, d: int) -> bool:
        """∂_{d-1} ∘ ∂_d = 0 (целочисленная проверка)"""
        upper = self.boundary_matrix(delta, d)
        lower = self.boundary_matrix(delta, d - 1)
        if not upper.columns or not lower.columns:
            return True
        for column in upper.columns:
            image: dict[int, int] = {}
            for i, value in column:
                for r, w in lower.columns[i]:
                    image[r] = image.get(r, 0) + value * w
            if any(image.values()):
                return False
        return True

    def _ranks(self, delta: SimplicialComplex, index: FaceIndex) -> dict[int, int]:
        """Ранги ∂_d для d = 0..dim: два модуля, при расхождении - ℚ"""
        top = len(index.levels) - 2
        ranks: dict[int, int] = {}
        cleared = {PRIME_62: set(), PRIME_61: set()}
        for d in range(top, -1, -1):
            by_prime = {}
            for p in (PRIME_62, PRIME_61):
                rank, pivot_rows = _reduce_mod_p(_boundary_columns(index, d), p, cleared[p])
                by_prime[p] = rank
                cleared[p] = pivot_rows
            if by_prime[PRIME_62] != by_prime[PRIME_61]:
                logger.warning(
                    "Модульные ранги ∂_%d расходятся (%d и %d), пересчет над ℚ",
                    d, by_prime[PRIME_62], by_prime[PRIME_61],
                )
                ranks[d] = _rank_over_rationals(self.boundary_matrix(delta, d))
            else:
                ranks[d] = by_prime[PRIME_62]
            logger.debug("rank ∂_%d = %d", d, ranks[d])
        return ranks

    def betti(self, delta: SimplicialComplex) -> BettiReport:
        """
        Приведенные числа Бетти: β_i = f_i - rank ∂_i - rank ∂_{i+1}.

        :raises ResourceCapExceeded: Если число граней превышает лимит
        """
        if delta.is_void:
            return BettiReport(void=True)
        index = delta.face_index(self.face_cap)
        ranks = self._ranks(delta, index)
        return self._report(delta, index, ranks)

    def _report(self, delta: SimplicialComplex, index: FaceIndex, ranks: dict[int, int], **extra) -> BettiReport:
        f = index.f_vector
        dims = list(range(-1, len(f) - 1))
        betti = {
            d: f[d + 1] - ranks.get(d, 0) - ranks.get(d + 1, 0)
            for d in dims
        }
        return BettiReport(
            dims=dims,
            f=f,
            betti=betti,
            euler_reduced=_alternating_sum(f),
            dimension=delta.dimension,
            **extra,
        )

    def euler_characteristic_reduced(self, delta: SimplicialComplex) -> int:
        """Σ (-1)^i f_i по i >= -1; для void - 0"""
        if delta.is_void:
            return 0
        return _alternating_sum(delta.f_vector(self.face_cap))

    def homology_oracle_snf(self, delta: SimplicialComplex) -> BettiReport:
        """
        Независимый оракул: нормальная форма Смита каждого ∂_d над ℤ.

        Сначала разреженно исключаются единичные опорные элементы,
        остаток приводится к нормальной форме Смита в sympy.
        """
        if delta.is_void:
            return BettiReport(void=True, torsion_checked=True)
        index = delta.face_index(self.snf_face_cap)
        ranks: dict[int, int] = {}
        primes: set[int] = set()
        for d in range(len(index.levels) - 1):
            rank, divisors = _smith_invariants(self.boundary_matrix(delta, d))
            ranks[d] = rank
            for divisor in divisors:
                if abs(divisor) > 1:
                    primes.update(factorint(abs(divisor)))
        if primes:
            logger.info("Найдено кручение: простые %s", sorted(primes))
        return self._report(
            delta,
            index,
            ranks,
            torsion_checked=True,
            torsion_found=bool(primes),
            torsion_primes=sorted(primes),
        )


def _alternating_sum(f: list[int]) -> int:
    # f[0] - пустая грань размерности -1
    return sum(count if (i - 1) % 2 == 0 else -count for i, count in enumerate(f))


def _smith_invariants(matrix: BoundaryMatrix) -> tuple[int, list[int]]:
    """Ранг и ненулевые элементарные делители целочисленной матрицы"""
    rows: dict[int, dict[int, int]] = matrix.to_dict_of_dicts()
    cols: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)

    rank = 0
    while True:
        best = None
        for j, col_rows in cols.items():
            for i in col_rows:
                if abs(rows[i][j]) != 1:
                    continue
                cost = (len(rows[i]) - 1) * (len(col_rows) - 1)
                if best is None or cost < best[0]:
                    best = (cost, i, j)
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pivot_row, pivot_col = best
        unit = rows[pivot_row][pivot_col]
        pivot_entries = rows.pop(pivot_row)
        for j in pivot_entries:
            cols[j].discard(pivot_row)
        for i in list(cols.pop(pivot_col)):
            row = rows[i]
            factor = row.pop(pivot_col) * unit
            for j, value in pivot_entries.items():
                if j == pivot_col:
                    continue
                updated = row.get(j, 0) - factor * value
                if updated:
                    if j not in row:
                        cols[j].add(i)
                    row[j] = updated
                elif j in row:
                    del row[j]
                    cols[j].discard(i)
            if not row:
                del rows[i]
        rank += 1

    live_rows = sorted(i for i, row in rows.items() if row)
    live_cols = sorted(j for j, col_rows in cols.items() if col_rows)
    if not live_rows or not live_cols:
        return rank, []
    row_position = {i: a for a, i in enumerate(live_rows)}
    col_position = {j: b for b, j in enumerate(live_cols)}
    dense = [[0] * len(live_cols) for _ in live_rows]
    for i in live_rows:
        for j, value in rows[i].items():
            dense[row_position[i]][col_position[j]] = value
    logger.debug("SNF остатка %dx%d", len(live_rows), len(live_cols))
    normal = smith_normal_form(Matrix(dense), domain=ZZ)
    divisors = [int(normal[t, t]) for t in range(min(normal.shape)) if normal[t, t] != 0]
    return rank + len(divisors), divisors


# Глобальный экземпляр движка
_homology_engine_instance = None


def get_homology_engine() -> HomologyEngine:
    """Получает глобальный экземпляр движка гомологий"""
    global _homology_engine_instance
    if _homology_engine_instance is None:
        _homology_engine_instance = HomologyEngine()
    return _homology_engine_instance
