"""
Общие заготовки для наборов проверок: план случаев и сборка SuiteCase.
"""

from typing import Callable, Optional

from core.errors import InvalidInputError
from domain.graphs import Graph, independence_number
from models.certificate import CertificateKind
from schemas.harness import SuiteCase
from schemas.homology import BettiReport
from schemas.morse import MorseReport
from .corpus import build_corpus
from .ranges import Ranges

CaseFn = Callable[..., SuiteCase]
Plan = list[tuple[CaseFn, dict[str, int]]]


def make_case(params: dict[str, int], expected, actual, note: Optional[str] = None) -> SuiteCase:
    return SuiteCase(params=params, expected=expected, actual=actual, passed=expected == actual, note=note)


def betti_summary(report: BettiReport):
    """"void" или ненулевые приведенные числа Бетти с ключами-строками"""
    if report.void:
        return "void"
    return {str(d): b for d, b in report.nonzero().items()}


def sphere_summary(dimension: int, count: int) -> dict[str, int]:
    return {str(dimension): count} if count else {}


def morse_agrees(report: MorseReport, betti: BettiReport) -> bool:
    """Сертификат Морса не противоречит гомологии (неопределенный ничему не противоречит)"""
    if report.sphere_dim is not None:
        return betti.nonzero() == {report.sphere_dim: report.sphere_count}
    if report.certificate is CertificateKind.CONTRACTIBLE:
        return not betti.void and betti.is_acyclic()
    return True


def corpus_graph(index: int) -> Graph:
    corpus = build_corpus()
    if not 0 <= index < len(corpus):
        raise InvalidInputError(f"Номер графа {index} вне корпуса 0..{len(corpus) - 1}")
    return corpus[index]


def corpus_plan(
    fn: CaseFn,
    ranges: Ranges,
    k_min: int,
    k_extra: int = 0,
    where: Optional[Callable[[Graph], bool]] = None,
) -> Plan:
    """
    Случаи (graph, k) по корпусу: k от k_min до α(G) + k_extra.

    Диапазоны "graph" и "k" из ranges сужают перебор.
    """
    indices = ranges.get("graph", range(len(build_corpus())))
    allowed_k = set(ranges["k"]) if "k" in ranges else None
    plan: Plan = []
    for index in indices:
        G = corpus_graph(index)
        if where is not None and not where(G):
            continue
        for k in range(k_min, independence_number(G) + k_extra + 1):
            if allowed_k is None or k in allowed_k:
                plan.append((fn, {"graph": index, "k": k}))
    return plan
