from .homology import BettiReport
from .morse import MorseReport
from .decide import (
    DecompositionNode,
    VertexDecomposability,
    ShellingResult,
    ShellingObstruction,
    ContractibilityCertificate,
)
from .harness import SuiteCase, SuiteResult, Prediction, ConjectureRow
from .api import (
    GraphRequest,
    BuildRequest,
    BuildResponse,
    HomologyRequest,
    MorseRequest,
    CheckRequest,
    CheckResponse,
)

__all__ = [
    "BettiReport",
    "MorseReport",
    "DecompositionNode",
    "VertexDecomposability",
    "ShellingResult",
    "ShellingObstruction",
    "ContractibilityCertificate",
    "SuiteCase",
    "SuiteResult",
    "Prediction",
    "ConjectureRow",
    "GraphRequest",
    "BuildRequest",
    "BuildResponse",
    "HomologyRequest",
    "MorseRequest",
    "CheckRequest",
    "CheckResponse",
]
