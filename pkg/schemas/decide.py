from __future__ import annotations

from pydantic import BaseModel, Field
from typing import Optional

from models.certificate import ContractibilityKind


class DecompositionNode(BaseModel):
    """Узел дерева вершинной разложимости: выбранная вершина или базовый случай"""
    vertex: Optional[int] = None
    base: Optional[str] = Field(None, description="simplex / empty_face / void")
    link: Optional[DecompositionNode] = None
    deletion: Optional[DecompositionNode] = None


class VertexDecomposability(BaseModel):
    decomposable: bool
    tree: Optional[DecompositionNode] = None
    reason: Optional[str] = None


class ShellingResult(BaseModel):
    shellable: bool
    order: Optional[list[list[int]]] = None


class ShellingObstruction(BaseModel):
    """Ненулевая приведенная гомология ниже верхней размерности"""
    dimension: int
    betti: int
    top_dimension: int
    reason: str


class ContractibilityCertificate(BaseModel):
    kind: ContractibilityKind
    vertex: Optional[int] = None
    schedule: list[int] = Field(default_factory=list)


DecompositionNode.model_rebuild()
