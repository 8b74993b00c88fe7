"""
Таблицы ненулевых приведенных чисел Бетти Δᵗ_k(G(m, n)): строки k, столбцы n.
"""

from typing import Optional

import logging

import pandas as pd
from joblib import Parallel, delayed

from core.config import settings
from core.errors import InvalidInputError, ResourceCapExceeded
from domain.cuts import total_cut_complex
from domain.graphs import grid
from models.harness import TableFamily, TableFormat, to_enum
from services.homology import HomologyEngine

logger = logging.getLogger(__name__)

VOID_CELL = "void"
ACYCLIC_CELL = "β_i=0, i ≥ 0"
SKIPPED_CELL = "skipped(cap)"


def table_cell(m: int, n: int, k: int, face_cap: Optional[int] = None) -> str:
    """Ячейка таблицы: "β_d=v" для каждого ненулевого числа Бетти, "void" или "β_i=0, i ≥ 0" """
    engine = HomologyEngine(face_cap=face_cap or settings.CUTCOMPLEX_TABLE_FACE_CAP)
    try:
        report = engine.betti(total_cut_complex(grid(m, n), k))
    except ResourceCapExceeded as e:
        logger.info("Ячейка G(%d,%d), k=%d пропущена: %s", m, n, k, e)
        return SKIPPED_CELL
    if report.void:
        return VOID_CELL
    nonzero = report.nonzero()
    if not nonzero:
        return ACYCLIC_CELL
    return ", ".join(f"β_{d}={b}" for d, b in nonzero.items())


def betti_table(
    family: TableFamily | str,
    kmax: int,
    nmax: int,
    kmin: int = 1,
    nmin: Optional[int] = None,
    face_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> pd.DataFrame:
    """
    Таблица для G(m, n) с m = family.rows.

    :param nmin: Первый столбец (по умолчанию n = m)
    :raises InvalidInputError: Пустой диапазон строк или столбцов
    """
    if isinstance(family, str):
        family = to_enum(TableFamily, family, "семейства таблицы")
    m = family.rows
    nmin = m if nmin is None else nmin
    if kmin < 1 or kmax < kmin:
        raise InvalidInputError(f"Некорректный диапазон k: {kmin}..{kmax}")
    if nmin < 1 or nmax < nmin:
        raise InvalidInputError(f"Некорректный диапазон n: {nmin}..{nmax}")

    ks = list(range(kmin, kmax + 1))
    ns = list(range(nmin, nmax + 1))
    cells = Parallel(n_jobs=workers or settings.CUTCOMPLEX_WORKERS)(
        delayed(table_cell)(m, n, k, face_cap) for k in ks for n in ns
    )
    rows = [cells[i * len(ns):(i + 1) * len(ns)] for i in range(len(ks))]
    table = pd.DataFrame(rows, index=pd.Index(ks, name="k"), columns=[f"n={n}" for n in ns])
    logger.info("Таблица %s: k=%d..%d, n=%d..%d", family.value, kmin, kmax, nmin, nmax)
    return table


def render_table(table: pd.DataFrame, fmt: TableFormat | str) -> str:
    if isinstance(fmt, str):
        fmt = to_enum(TableFormat, fmt, "формата таблицы")
    if fmt is TableFormat.CSV:
        return table.to_csv()
    if fmt is TableFormat.MD:
        return table.to_markdown()
    if fmt is TableFormat.JSON:
        return table.to_json(orient="index", force_ascii=False, indent=2)
    return table.to_string()


def emit_table(
    family: TableFamily | str,
    kmax: int,
    nmax: int,
    fmt: TableFormat | str = TableFormat.TEXT,
    kmin: int = 1,
    nmin: Optional[int] = None,
    face_cap: Optional[int] = None,
) -> str:
    """Таблица чисел Бетти в текстовом виде, CSV, Markdown или JSON"""
    return render_table(betti_table(family, kmax, nmax, kmin=kmin, nmin=nmin, face_cap=face_cap), fmt)
