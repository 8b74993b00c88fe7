from pathlib import Path
from typing import Optional

import logging

from core.errors import InvalidInputError
from domain.bitsets import bits_of
from domain.complexes import SimplicialComplex
from domain.cuts import cut_complex, total_cut_complex
from domain.graphs import Graph, family, family_name, load_graph, parse_family_spec, parse_graph_text
from models.complex import CutVariant
from models.harness import CheckProperty, GraphFamily
from schemas.api import BuildResponse, CheckResponse
from schemas.homology import BettiReport
from schemas.morse import MorseReport
from services.decide import DecisionEngine, get_decision_engine
from services.homology import HomologyEngine, get_homology_engine
from services.morse import MorseEngine, get_morse_engine, lex_schedule, preset_for_graph

logger = logging.getLogger(__name__)


class ResolvedGraph:
    """Граф вместе с семейством, из которого он построен (если известно)"""

    def __init__(self, graph: Graph, kind: Optional[GraphFamily] = None, params: Optional[list[int]] = None):
        self.graph = graph
        self.kind = kind
        self.params = params or []


class ComplexProcessor:
    """Сервис, связывающий графы, построение комплексов и движки"""

    def __init__(
        self,
        homology: Optional[HomologyEngine] = None,
        morse: Optional[MorseEngine] = None,
        decision: Optional[DecisionEngine] = None,
    ):
        self.homology_engine = homology or get_homology_engine()
        self.morse_engine = morse or get_morse_engine()
        self.decision_engine = decision or get_decision_engine()

    def resolve_graph(self, graph: Optional[str] = None, graph_text: Optional[str] = None) -> ResolvedGraph:
        """
        Граф из текста "n m / i j", из файла или из спецификации семейства.

        :raises InvalidInputError: Не задан ни один источник или источник некорректен
        """
        if graph_text:
            return ResolvedGraph(parse_graph_text(graph_text))
        if not graph:
            raise InvalidInputError("Не задан граф: укажите спецификацию семейства или текст графа")
        if Path(graph).is_file():
            return ResolvedGraph(load_graph(graph))
        kind, params = parse_family_spec(graph)
        G = family(kind, *params)
        logger.debug("Граф %s: n=%d, ребер %d", family_name(kind, tuple(params)), G.n, G.num_edges)
        return ResolvedGraph(G, kind, params)

    def build(self, G: Graph, k: int, variant: CutVariant = CutVariant.TOTAL) -> SimplicialComplex:
        if variant is CutVariant.CUT:
            return cut_complex(G, k)
        return total_cut_complex(G, k)

    def build_response(self, G: Graph, k: int, variant: CutVariant = CutVariant.TOTAL) -> BuildResponse:
        delta = self.build(G, k, variant)
        return BuildResponse(
            n=G.n,
            k=k,
            variant=variant,
            void=delta.is_void,
            dimension=delta.dimension,
            facets=[bits_of(face) for face in delta.facets],
        )

    def homology(self, G: Graph, k: int, snf: bool = False) -> BettiReport:
        delta = total_cut_complex(G, k)
        if snf:
            return self.homology_engine.homology_oracle_snf(delta)
        return self.homology_engine.betti(delta)

    def resolve_schedule(self, resolved: ResolvedGraph, k: int, schedule: str, delta: SimplicialComplex) -> list[int]:
        """
        "lex" - все вершины по возрастанию, "preset" - расписание семейства,
        иначе список вершин через запятую.
        """
        text = schedule.strip().lower()
        if text == "lex":
            return lex_schedule(delta)
        if text == "preset":
            if resolved.kind is None:
                raise InvalidInputError("Готовое расписание доступно только для графа, заданного семейством")
            return preset_for_graph(resolved.kind, resolved.params, k)
        try:
            return [int(x) for x in text.split(",") if x.strip()]
        except ValueError:
            raise InvalidInputError(f"Некорректное расписание: {schedule!r}")

    def morse(self, resolved: ResolvedGraph, k: int, schedule: str = "lex", verify: bool = True) -> MorseReport:
        """
        Паросочетание по расписанию, сертификат и проверка неравенств Морса.

        :raises InvalidInputError: Некорректное расписание или неацикличное паросочетание
        """
        delta = total_cut_complex(resolved.graph, k)
        vertices = self.resolve_schedule(resolved, k, schedule, delta)
        matching = self.morse_engine.element_matching_sequence(delta, vertices)
        betti = self.homology_engine.betti(delta)
        return self.morse_engine.morse_report(delta, matching, betti=betti, verify=verify)

    def check(
        self,
        G: Graph,
        k: int,
        prop: CheckProperty,
        facet_cap: Optional[int] = None,
    ) -> CheckResponse:
        """Проверка структурного свойства Δᵗ_k(G); holds = None означает "не доказано" """
        delta = total_cut_complex(G, k)
        if prop is CheckProperty.VD:
            result = self.decision_engine.is_vertex_decomposable(delta)
            return CheckResponse(property=prop, holds=result.decomposable, detail=result.model_dump(exclude_none=True))
        if prop is CheckProperty.SHELLING:
            result = self.decision_engine.find_shelling(delta, facet_cap=facet_cap)
            return CheckResponse(property=prop, holds=result.shellable, detail=result.model_dump(exclude_none=True))
        if prop is CheckProperty.OBSTRUCTION:
            obstruction = self.decision_engine.non_shellability_obstruction(delta, self.homology_engine.betti(delta))
            detail = obstruction.model_dump() if obstruction is not None else {}
            return CheckResponse(property=prop, holds=obstruction is not None, detail=detail)
        certificate = self.decision_engine.contractibility_certificate(delta)
        if certificate is None:
            return CheckResponse(property=prop, holds=None, detail={"reason": "сертификат не найден"})
        return CheckResponse(property=prop, holds=True, detail=certificate.model_dump(mode="json"))
