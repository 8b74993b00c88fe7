import networkx as nx
import pytest

from domain.graphs import Graph, square_with_pendants
from services.decide import DecisionEngine
from services.homology import HomologyEngine
from services.morse import MorseEngine

random_seed = 20231


@pytest.fixture
def sqp() -> Graph:
    """Квадрат 0-1-2-3 с висячими вершинами 4 и 5 при вершине 3"""
    return square_with_pendants()


@pytest.fixture
def homology_engine() -> HomologyEngine:
    return HomologyEngine()


@pytest.fixture
def morse_engine() -> MorseEngine:
    return MorseEngine()


@pytest.fixture
def decision_engine(morse_engine) -> DecisionEngine:
    return DecisionEngine(morse=morse_engine)


@pytest.fixture
def to_networkx():
    def convert(G: Graph) -> nx.Graph:
        H = nx.Graph()
        H.add_nodes_from(range(G.n))
        H.add_edges_from(G.edges())
        return H
    return convert
