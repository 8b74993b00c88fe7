from fastapi import APIRouter, HTTPException, Query
from typing import Optional

import logging

from core.errors import InvalidInputError, ResourceCapExceeded
from models.harness import ConjectureId, SuiteId, TableFamily, TableFormat, to_enum
from schemas.api import BuildRequest, BuildResponse, CheckRequest, CheckResponse, HomologyRequest, MorseRequest
from schemas.harness import ConjectureRow, SuiteResult
from schemas.homology import BettiReport
from schemas.morse import MorseReport
from services.complex_processor import ComplexProcessor
from services.harness import emit_table, parse_ranges, run_suite, sweep_conjecture

logger = logging.getLogger(__name__)

router = APIRouter()


def _http_error(e: Exception, action: str) -> HTTPException:
    """InvalidInputError -> 400, ResourceCapExceeded -> 413, остальное -> 500"""
    if isinstance(e, HTTPException):
        return e
    if isinstance(e, InvalidInputError):
        return HTTPException(status_code=400, detail=str(e))
    if isinstance(e, ResourceCapExceeded):
        return HTTPException(status_code=413, detail=str(e))
    logger.exception("Ошибка при %s", action)
    return HTTPException(status_code=500, detail=f"Ошибка при {action}: {str(e)}")


@router.post("/build", response_model=BuildResponse)
async def build(request: BuildRequest):
    """Фасеты тотального k-разрезного комплекса (или k-разрезного при variant=cut)"""
    try:
        processor = ComplexProcessor()
        resolved = processor.resolve_graph(request.graph, request.graph_text)
        return processor.build_response(resolved.graph, request.k, request.variant)
    except Exception as e:
        raise _http_error(e, "построении комплекса")


@router.post("/homology", response_model=BettiReport)
async def homology(request: HomologyRequest):
    """Приведенные числа Бетти; при snf=true - через нормальную форму Смита с проверкой кручения"""
    try:
        processor = ComplexProcessor()
        resolved = processor.resolve_graph(request.graph, request.graph_text)
        return processor.homology(resolved.graph, request.k, snf=request.snf)
    except Exception as e:
        raise _http_error(e, "вычислении гомологий")


@router.post("/morse", response_model=MorseReport)
async def morse(request: MorseRequest):
    try:
        processor = ComplexProcessor()
        resolved = processor.resolve_graph(request.graph, request.graph_text)
        return processor.morse(resolved, request.k, request.schedule, verify=request.verify_acyclic)
    except Exception as e:
        raise _http_error(e, "построении паросочетания")


@router.post("/check", response_model=CheckResponse)
async def check(request: CheckRequest):
    """
    Структурные свойства:
    - vd: вершинная разложимость
    - shelling: поиск шеллинга (ограничен facet_cap)
    - obstruction: гомологическое препятствие к шеллингу
    - contractible: сертификат стягиваемости
    """
    try:
        processor = ComplexProcessor()
        resolved = processor.resolve_graph(request.graph, request.graph_text)
        return processor.check(resolved.graph, request.k, request.property, facet_cap=request.facet_cap)
    except Exception as e:
        raise _http_error(e, "проверке свойства")


@router.get("/verify/{suite_id}", response_model=SuiteResult)
async def verify(
    suite_id: str,
    ranges: Optional[str] = Query(None, description="Диапазоны параметров, например n=2..6,k=2..5"),
):
    try:
        return run_suite(to_enum(SuiteId, suite_id, "набора проверок"), parse_ranges(ranges))
    except Exception as e:
        raise _http_error(e, "проверке набора")


@router.get("/sweep/{conjecture}", response_model=list[ConjectureRow])
async def sweep(
    conjecture: str,
    ranges: Optional[str] = Query(None, description="Диапазоны параметров, например k=2..3,n=6..12"),
):
    try:
        return sweep_conjecture(to_enum(ConjectureId, conjecture, "гипотезы"), parse_ranges(ranges))
    except Exception as e:
        raise _http_error(e, "свипе гипотезы")


@router.get("/tables/{family}")
async def tables(
    family: str,
    kmax: int = Query(4, ge=1, description="Последняя строка k"),
    nmax: int = Query(5, ge=1, description="Последний столбец n"),
    format: str = Query("json", description="Формат: text, csv, md, json"),
):
    try:
        table_family = to_enum(TableFamily, family, "семейства таблицы")
        table_format = to_enum(TableFormat, format, "формата таблицы")
        return {
            "family": table_family.value,
            "format": table_format.value,
            "table": emit_table(table_family, kmax, nmax, table_format),
        }
    except Exception as e:
        raise _http_error(e, "построении таблицы")
