"""
Наборы по семействам графов: ожидаемые значения вычисляются по замкнутым
формулам, фактические - матричной гомологией и паросочетаниями Морса.
"""

from math import comb
from typing import Optional

import logging

import numpy as np

from core.config import settings
from core.errors import ResourceCapExceeded
from domain.bitsets import bits_of, full_mask, mask_of
from domain.cuts import total_cut_complex
from domain.graphs import (
    Graph,
    complete_bipartite,
    components,
    cycle,
    edgeless,
    grid,
    has_independent_set,
    path,
    prism,
    random_chordal_graph,
    random_tree,
    squared_cycle,
)
from domain.complexes import SimplicialComplex
from models.certificate import CertificateKind
from models.harness import ScheduleFamily
from schemas.harness import SuiteCase
from schemas.morse import MorseReport
from services.decide import get_decision_engine
from services.homology import get_homology_engine
from services.morse import get_morse_engine, preset_schedule
from .cases import Plan, betti_summary, make_case, morse_agrees, sphere_summary
from .ranges import Ranges, merge_ranges

logger = logging.getLogger(__name__)

# Случайных графов на каждое n
CHORDAL_SAMPLES = 30
TREE_SAMPLES = 10

WEDGE = CertificateKind.WEDGE_OF_SPHERES.value


def _morse(delta: SimplicialComplex, family: ScheduleFamily, params: list[int]) -> MorseReport:
    engine = get_morse_engine()
    matching = engine.element_matching_sequence(delta, preset_schedule(family, params))
    return engine.morse_report(delta, matching)


def _certificate(report: MorseReport) -> dict:
    return {
        "certificate": report.certificate.value,
        "cells": {str(d): c for d, c in report.cells_per_dim.items()},
    }


def _sample_rng(*key: int) -> np.random.Generator:
    return np.random.default_rng([settings.CUTCOMPLEX_CORPUS_SEED, *key])


def _pairs(ranges: Ranges, first: str, second: str, defaults: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Пары параметров: по умолчанию - список defaults, при заданных диапазонах - их произведение"""
    if first not in ranges and second not in ranges:
        return defaults
    firsts = ranges.get(first, sorted({a for a, _ in defaults}))
    seconds = ranges.get(second, sorted({b for _, b in defaults}))
    return [(a, b) for a in firsts for b in seconds]


def edgeless_case(n: int, k: int) -> SuiteCase:
    """
    Δᵗ_k пустого графа - (n-k-1)-остов симплекса: букет C(n-1, k-1) сфер.

    Та же формула дает пример с изолированной вершиной: добавление вершины
    к пустому графу на n-1 вершинах.
    """
    betti = get_homology_engine().betti(total_cut_complex(edgeless(n), k))
    return make_case({"n": n, "k": k}, sphere_summary(n - k - 1, comb(n - 1, k - 1)), betti_summary(betti))


def bipartite_case(m: int, n: int, k: int) -> SuiteCase:
    """
    K_{m,n}, m <= n, k >= 2: при k <= m букет C(m-1,k-1)·C(n-1,k-1) сфер
    S^{m+n-2k} (расписание a₁, b₁); при m < k <= n стягиваем; при k > n void.
    Шеллингуем тогда и только тогда, когда m < k.
    """
    delta = total_cut_complex(complete_bipartite(m, n), k)
    betti = get_homology_engine().betti(delta)

    if k > n:
        expected: dict = {"betti": "void"}
    elif k > m:
        expected = {"betti": {}}
    else:
        count = comb(m - 1, k - 1) * comb(n - 1, k - 1)
        expected = {
            "betti": sphere_summary(m + n - 2 * k, count),
            "morse": {"certificate": WEDGE, "cells": sphere_summary(m + n - 2 * k, count)},
        }
    actual: dict = {"betti": betti_summary(betti)}
    if k <= m:
        actual["morse"] = _certificate(_morse(delta, ScheduleFamily.BIPARTITE, [m, n]))

    note = None
    try:
        actual["shellable"] = get_decision_engine().find_shelling(delta).shellable
        expected["shellable"] = m < k
    except ResourceCapExceeded as e:
        note = f"шеллинг не проверялся: {e}"
    return make_case({"m": m, "n": n, "k": k}, expected, actual, note=note)


def prism_case(n: int) -> SuiteCase:
    """Δᵗ₂ призмы K_n × K_2: букет n-1 сфер S^{2n-4}, критические клетки размера 2n-3"""
    delta = total_cut_complex(prism(n), 2)
    betti = get_homology_engine().betti(delta)
    report = _morse(delta, ScheduleFamily.PRISM, [n])
    expected = {
        "betti": sphere_summary(2 * n - 4, n - 1),
        "morse": {"certificate": WEDGE, "cells": sphere_summary(2 * n - 4, n - 1)},
    }
    actual = {"betti": betti_summary(betti), "morse": _certificate(report)}
    if n == 3:
        expected["critical"] = [[1, 3, 4], [2, 3, 5]]
        actual["critical"] = report.critical_faces
    return make_case({"n": n}, expected, actual)


def chordal_case(n: int, sample: int, k: int) -> SuiteCase:
    """
    Хордальный граф с c компонентами: Δᵗ_k вершинно разложим; букет
    C(c-1, k-1) сфер S^{n-k-1} при c >= k, иначе стягиваем или void.
    """
    G = random_chordal_graph(n, _sample_rng(n, sample))
    delta = total_cut_complex(G, k)
    c = len(components(G))
    if c >= k:
        expected_betti = sphere_summary(n - k - 1, comb(c - 1, k - 1))
    elif has_independent_set(G, k):
        expected_betti = {}
    else:
        expected_betti = "void"
    expected = {"vd": True, "betti": expected_betti}
    actual = {
        "vd": get_decision_engine().is_vertex_decomposable(delta).decomposable,
        "betti": betti_summary(get_homology_engine().betti(delta)),
    }
    return make_case({"n": n, "sample": sample, "k": k}, expected, actual, note=f"c={c}, m={G.num_edges}")


def _tree_case(G: Graph, params: dict[str, int], k: int, schedule: Optional[ScheduleFamily]) -> SuiteCase:
    delta = total_cut_complex(G, k)
    betti = get_homology_engine().betti(delta)
    expected: dict = {"betti": {} if has_independent_set(G, k) else "void"}
    actual: dict = {"betti": betti_summary(betti)}
    if schedule is not None and not delta.is_void:
        report = _morse(delta, schedule, [G.n])
        expected["morse_agrees"] = True
        actual["morse_agrees"] = morse_agrees(report, betti)
        expected["contractible_certificate"] = True
        actual["contractible_certificate"] = get_decision_engine().contractibility_certificate(delta) is not None
    return make_case(params, expected, actual, note=G.label())


def tree_case(n: int, sample: int, k: int) -> SuiteCase:
    """Дерево с независимым k-множеством, k >= 2: Δᵗ_k стягиваем"""
    G = random_tree(n, _sample_rng(n, sample, 1))
    return _tree_case(G, {"n": n, "sample": sample, "k": k}, k, None)


def path_case(n: int, k: int) -> SuiteCase:
    """Путь P_n: при 2k <= n+1 стягиваем с сертификатом, иначе void"""
    return _tree_case(path(n), {"n": n, "k": k}, k, ScheduleFamily.PATH)


def cycle_case(n: int, k: int) -> SuiteCase:
    """
    C_n: void при n < 2k; иначе n/(n-k)·C(n-k, k) фасет, одна сфера
    S^{n-2k}, одна критическая клетка и препятствие к шеллингу.
    """
    delta = total_cut_complex(cycle(n), k)
    betti = get_homology_engine().betti(delta)
    if n < 2 * k:
        return make_case({"n": n, "k": k}, {"betti": "void"}, {"betti": betti_summary(betti)})

    expected = {
        "facets": n * comb(n - k, k) // (n - k),
        "betti": sphere_summary(n - 2 * k, 1),
        "morse": {"certificate": WEDGE, "cells": sphere_summary(n - 2 * k, 1)},
        "obstruction": True,
    }
    obstruction = get_decision_engine().non_shellability_obstruction(delta, betti)
    actual = {
        "facets": delta.num_facets,
        "betti": betti_summary(betti),
        "morse": _certificate(_morse(delta, ScheduleFamily.CYCLE, [n, k])),
        "obstruction": obstruction is not None,
    }
    return make_case({"n": n, "k": k}, expected, actual)


# Критические грани Δᵗ₂(G(3,3)) по расписанию решетки: дополнения этих множеств
GRID_3X3_CRITICAL_COMPLEMENTS = ([0, 3, 4], [0, 4, 5], [0, 6, 7], [0, 7, 8])


def grid_case(m: int, n: int) -> SuiteCase:
    """Δᵗ₂(G(m, n)): букет (m-1)(n-1) сфер S^{mn-4}"""
    delta = total_cut_complex(grid(m, n), 2)
    betti = get_homology_engine().betti(delta)
    report = _morse(delta, ScheduleFamily.GRID, [m, n])
    count = (m - 1) * (n - 1)
    expected = {
        "betti": sphere_summary(m * n - 4, count),
        "morse": {"certificate": WEDGE, "cells": sphere_summary(m * n - 4, count)},
    }
    actual = {"betti": betti_summary(betti), "morse": _certificate(report)}
    if (m, n) == (3, 3):
        full = full_mask(9)
        faces = sorted(full & ~mask_of(s) for s in GRID_3X3_CRITICAL_COMPLEMENTS)
        expected["critical"] = [bits_of(face) for face in faces]
        actual["critical"] = report.critical_faces
    return make_case({"m": m, "n": n}, expected, actual)


# Фасеты Δᵗ₂(W₆)
W6_FACETS = ([0, 1, 3, 4], [1, 2, 4, 5], [0, 2, 3, 5])


def squared_cycle_case(n: int) -> SuiteCase:
    """Δᵗ₂(W_6) ≃ S¹; при n >= 7 одна сфера S^{n-4} по расписанию 1..n-3, n-1"""
    delta = total_cut_complex(squared_cycle(n), 2)
    betti = get_homology_engine().betti(delta)
    if n == 6:
        expected = {
            "facets": [bits_of(face) for face in sorted(mask_of(f) for f in W6_FACETS)],
            "betti": sphere_summary(1, 1),
        }
        actual = {"facets": [bits_of(face) for face in delta.facets], "betti": betti_summary(betti)}
        return make_case({"n": n}, expected, actual)

    report = _morse(delta, ScheduleFamily.SQUARED_CYCLE, [n])
    critical = full_mask(n) & ~mask_of([0, n - 4, n - 2])
    expected = {
        "betti": sphere_summary(n - 4, 1),
        "morse": {"certificate": WEDGE, "cells": sphere_summary(n - 4, 1)},
        "critical": [bits_of(critical)],
    }
    actual = {
        "betti": betti_summary(betti),
        "morse": _certificate(report),
        "critical": report.critical_faces,
    }
    return make_case({"n": n}, expected, actual)


def plan_edgeless(ranges: Ranges) -> Plan:
    ranges = merge_ranges({"n": list(range(1, 8))}, ranges)
    return [
        (edgeless_case, {"n": n, "k": k})
        for n in ranges["n"]
        for k in ranges.get("k", range(1, n + 1))
        if 1 <= k <= n
    ]


def plan_bipartite(ranges: Ranges) -> Plan:
    ranges = merge_ranges({"m": list(range(1, 7)), "n": list(range(1, 7))}, ranges)
    return [
        (bipartite_case, {"m": m, "n": n, "k": k})
        for m in ranges["m"]
        for n in ranges["n"]
        if 1 <= m <= n
        for k in ranges.get("k", range(2, n + 2))
        if k >= 2
    ]


def plan_prism(ranges: Ranges) -> Plan:
    ranges = merge_ranges({"n": list(range(2, 7))}, ranges)
    return [(prism_case, {"n": n}) for n in ranges["n"] if n >= 2]


def plan_chordal(ranges: Ranges) -> Plan:
    ranges = merge_ranges({"n": list(range(1, 9)), "sample": list(range(CHORDAL_SAMPLES))}, ranges)
    return [
        (chordal_case, {"n": n, "sample": sample, "k": k})
        for n in ranges["n"]
        if n >= 1
        for sample in ranges["sample"]
        for k in ranges.get("k", range(1, n + 1))
        if 1 <= k <= n
    ]


def plan_trees(ranges: Ranges) -> Plan:
    ranges = merge_ranges({"n": list(range(1, 9)), "sample": list(range(TREE_SAMPLES))}, ranges)
    plan: Plan = []
    for n in ranges["n"]:
        if n < 1:
            continue
        ks = [k for k in ranges.get("k", range(2, n + 1)) if k >= 2]
        plan += [(path_case, {"n": n, "k": k}) for k in ks]
        plan += [
            (tree_case, {"n": n, "sample": sample, "k": k})
            for sample in ranges["sample"]
            for k in ks
        ]
    return plan


def plan_cycles(ranges: Ranges) -> Plan:
    ranges = merge_ranges({"n": list(range(4, 15)), "k": list(range(2, 6))}, ranges)
    return [
        (cycle_case, {"n": n, "k": k})
        for n in ranges["n"]
        if n >= 3
        for k in ranges["k"]
        if k >= 2
    ]


def plan_grid(ranges: Ranges) -> Plan:
    defaults = [(2, n) for n in range(2, 7)] + [(3, n) for n in range(3, 5)]
    return [
        (grid_case, {"m": m, "n": n})
        for m, n in _pairs(ranges, "m", "n", defaults)
        if 2 <= m <= n
    ]


def plan_squared_cycle(ranges: Ranges) -> Plan:
    ranges = merge_ranges({"n": list(range(6, 11))}, ranges)
    return [(squared_cycle_case, {"n": n}) for n in ranges["n"] if n >= 6]
