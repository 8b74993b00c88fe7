"""
Реестр наборов проверок и их запуск.

Случаи набора независимы и выполняются через joblib; результаты
собираются в порядке плана, поэтому два прогона дают одинаковый JSON.
"""

from typing import Callable, Optional

import logging
import time

from joblib import Parallel, delayed

from core.config import settings
from core.errors import ResourceCapExceeded
from models.harness import SuiteId, to_enum
from schemas.harness import SuiteCase, SuiteResult
from . import families, structural
from .cases import CaseFn, Plan
from .ranges import Ranges

logger = logging.getLogger(__name__)

# Планировщики: диапазоны параметров -> список случаев
SUITES: dict[SuiteId, Callable[[Ranges], Plan]] = {
    SuiteId.RIDGE_FACET: structural.plan_ridge_facet,
    SuiteId.ISOLATED_DECOMPOSITION: structural.plan_isolated_decomposition,
    SuiteId.LINK_LEMMA: structural.plan_link_lemma,
    SuiteId.DELETION_LEMMA: structural.plan_deletion_lemma,
    SuiteId.SUSPENSION: structural.plan_suspension,
    SuiteId.LES_EULER: structural.plan_les_euler,
    SuiteId.EDGELESS: families.plan_edgeless,
    SuiteId.BIPARTITE: families.plan_bipartite,
    SuiteId.PRISM: families.plan_prism,
    SuiteId.CHORDAL: families.plan_chordal,
    SuiteId.TREES: families.plan_trees,
    SuiteId.CYCLES: families.plan_cycles,
    SuiteId.GRID: families.plan_grid,
    SuiteId.SQUARED_CYCLE: families.plan_squared_cycle,
    SuiteId.REALIZABILITY: structural.plan_realizability,
    SuiteId.ORACLE: structural.plan_oracle,
}


def _run_case(fn: CaseFn, params: dict[str, int]) -> SuiteCase:
    try:
        return fn(**params)
    except ResourceCapExceeded as e:
        return SuiteCase(params=params, skipped=True, note=str(e))


def run_suite(
    suite_id: SuiteId | str,
    ranges: Optional[Ranges] = None,
    workers: Optional[int] = None,
) -> SuiteResult:
    """
    Запускает набор проверок.

    :param suite_id: Идентификатор набора
    :param ranges: Диапазоны параметров ("n", "k", "m", "graph", ...), сужающие план
    :param workers: Число процессов joblib (по умолчанию CUTCOMPLEX_WORKERS)
    :raises InvalidInputError: Неизвестный набор или параметр вне корпуса
    """
    if isinstance(suite_id, str):
        suite_id = to_enum(SuiteId, suite_id, "набора проверок")
    plan = SUITES[suite_id](ranges or {})
    logger.info("Набор %s: %d случаев", suite_id.value, len(plan))

    started = time.perf_counter()
    cases = Parallel(n_jobs=workers or settings.CUTCOMPLEX_WORKERS)(
        delayed(_run_case)(fn, params) for fn, params in plan
    )
    result = SuiteResult(
        suite_id=suite_id.value,
        cases=list(cases),
        runtime_ms=int((time.perf_counter() - started) * 1000),
    )
    logger.info(
        "Набор %s: проверено %d, расхождений %d, пропущено %d за %d мс",
        suite_id.value,
        result.verified_count,
        result.failed_count,
        result.skipped_count,
        result.runtime_ms,
    )
    return result
