from pydantic import BaseModel, Field
from typing import Optional

from models.complex import CutVariant
from models.harness import CheckProperty


class GraphRequest(BaseModel):
    """Граф задается спецификацией семейства ("grid:3,4") или текстом "n m / i j" """
    graph: Optional[str] = Field(None, description="Спецификация семейства, например prism:5")
    graph_text: Optional[str] = Field(None, description="Текстовое описание графа")
    k: int = Field(..., ge=0, description="Размер независимых множеств")


class BuildRequest(GraphRequest):
    variant: CutVariant = CutVariant.TOTAL


class BuildResponse(BaseModel):
    n: int
    k: int
    variant: CutVariant
    void: bool
    dimension: Optional[int]
    facets: list[list[int]]


class HomologyRequest(GraphRequest):
    snf: bool = False


class MorseRequest(GraphRequest):
    schedule: str = Field("lex", description="lex, preset или список вершин через запятую")
    verify_acyclic: bool = True


class CheckRequest(GraphRequest):
    property: CheckProperty
    facet_cap: Optional[int] = Field(None, ge=1)


class CheckResponse(BaseModel):
    property: CheckProperty
    holds: Optional[bool] = Field(None, description="None - процедура ничего не доказала")
    detail: dict = Field(default_factory=dict)
