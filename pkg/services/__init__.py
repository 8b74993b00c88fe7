from .homology import HomologyEngine, get_homology_engine
from .morse import MorseEngine, Matching, get_morse_engine
from .decide import DecisionEngine, get_decision_engine
from .complex_processor import ComplexProcessor, ResolvedGraph

__all__ = [
    "HomologyEngine",
    "get_homology_engine",
    "MorseEngine",
    "Matching",
    "get_morse_engine",
    "DecisionEngine",
    "get_decision_engine",
    "ComplexProcessor",
    "ResolvedGraph",
]
