"""
Свипы гипотез: наблюдаемые числа Бетти против предсказаний по формулам.

Расхождения только сообщаются; гипотезы не доказываются.
"""

from math import comb
from typing import Optional

import logging

from core.errors import ResourceCapExceeded
from domain.cuts import total_cut_complex
from domain.graphs import Graph, grid, squared_cycle
from models.harness import ConjectureId, to_enum
from schemas.harness import ConjectureRow, Prediction
from services.homology import get_homology_engine
from .ranges import Ranges, merge_ranges

logger = logging.getLogger(__name__)


def squared_cycle_predictions(n: int, k: int) -> list[Prediction]:
    """
    Предсказания для Δᵗ_k(W_n).

    void при n <= 3k-1; одна сфера размерности 2i+1 при n = 3k+i,
    0 <= i <= k-1, и размерности 2k+i при n = 4k+i. При n = 4k первая
    формула, продолженная на i = k, дает 2k+1; эта граничная ветвь
    выдается отдельно и в вердикт не входит.
    """
    if n <= 3 * k - 1:
        return [Prediction(branch="void", void=True)]
    predictions = []
    if n < 4 * k:
        predictions.append(Prediction(branch="3k+i", dimension=2 * (n - 3 * k) + 1, count=1))
    else:
        predictions.append(Prediction(branch="4k+i", dimension=2 * k + (n - 4 * k), count=1))
        if n == 4 * k:
            predictions.append(Prediction(branch="3k+i (i=k)", dimension=2 * k + 1, count=1))
    return predictions


def grid_predictions(m: int, n: int, k: int) -> list[Prediction]:
    """
    Предсказания для Δᵗ_k(G(m, n)).

    G(2, n), k >= 2: β_{2n-2k} = C(n-1, k-1), при k > n комплекс void.
    G(3, n): β_{3n-6} = C(2n-2, 2) при k = 3 и β_{3n-8} = C(2n-2, 3) при k = 4.
    Для остальных (m, k) формул нет.
    """
    if m == 2 and k >= 2:
        if k > n:
            return [Prediction(branch="alpha", void=True)]
        return [Prediction(branch="G(2,n)", dimension=2 * n - 2 * k, count=comb(n - 1, k - 1))]
    if m == 3 and k == 3:
        return [Prediction(branch="G(3,n), k=3", dimension=3 * n - 6, count=comb(2 * n - 2, 2))]
    if m == 3 and k == 4:
        return [Prediction(branch="G(3,n), k=4", dimension=3 * n - 8, count=comb(2 * n - 2, 3))]
    return []


def _matches(prediction: Prediction, observed: Optional[dict[int, int]], observed_void: bool) -> bool:
    if prediction.void:
        return observed_void
    if observed_void or observed is None:
        return False
    return observed.get(prediction.dimension, 0) == prediction.count


def _row(
    conjecture: ConjectureId,
    G: Graph,
    k: int,
    params: dict[str, int],
    predictions: list[Prediction],
) -> ConjectureRow:
    row = ConjectureRow(conjecture=conjecture.value, params=params, predictions=predictions)
    try:
        report = get_homology_engine().betti(total_cut_complex(G, k))
    except ResourceCapExceeded as e:
        logger.info("Строка %s %s пропущена: %s", conjecture.value, params, e)
        row.skipped = True
        row.note = str(e)
        return row
    row.observed_void = report.void
    row.observed = None if report.void else report.nonzero()
    # вердикт - по первой (строгой) ветви
    row.match = _matches(predictions[0], row.observed, row.observed_void)
    if not row.match:
        logger.warning("Расхождение с гипотезой %s при %s: %s", conjecture.value, params, row.observed)
    return row


def sweep_conjecture(which: ConjectureId | str, ranges: Optional[Ranges] = None) -> list[ConjectureRow]:
    """
    Строки свипа гипотезы в порядке возрастания параметров.

    squared_cycle: диапазоны k (по умолчанию 2..3) и n (по умолчанию 3..3k+5);
    grid_k: диапазоны m (2..3), k (2..4) и n (2..5), строки без формулы опускаются.
    """
    if isinstance(which, str):
        which = to_enum(ConjectureId, which, "гипотезы")
    rows: list[ConjectureRow] = []

    if which is ConjectureId.SQUARED_CYCLE:
        ranges = merge_ranges({"k": [2, 3]}, ranges)
        for k in ranges["k"]:
            if k < 1:
                continue
            for n in ranges.get("n", range(3, 3 * k + 6)):
                if n < 3:
                    continue
                params = {"k": k, "n": n}
                rows.append(_row(which, squared_cycle(n), k, params, squared_cycle_predictions(n, k)))
        return rows

    ranges = merge_ranges({"m": [2, 3], "k": [2, 3, 4], "n": [2, 3, 4, 5]}, ranges)
    for m in ranges["m"]:
        for k in ranges["k"]:
            for n in ranges["n"]:
                if n < max(m, 1) or m < 1:
                    continue
                predictions = grid_predictions(m, n, k)
                if not predictions:
                    continue
                params = {"m": m, "k": k, "n": n}
                rows.append(_row(which, grid(m, n), k, params, predictions))
    logger.info("Свип %s: %d строк", which.value, len(rows))
    return rows
