from itertools import combinations

import numpy as np
import pytest

from core.errors import InvalidInputError, ResourceCapExceeded
from domain.bitsets import full_mask, mask_of
from domain.complexes import SimplicialComplex, boundary_of_simplex, link, simplex, skeleton
from domain.cuts import total_cut_complex
from domain.graphs import (
    complete_bipartite,
    cycle,
    edgeless,
    independence_number,
    is_chordal,
    make_graph,
    path,
    random_chordal_graph,
)
from models.certificate import ContractibilityKind
from services.decide import DecisionEngine, is_shelling_order

random_seed = 20231


def _complex(n: int, *facets: list[int]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, [mask_of(f) for f in facets])


def test_square_with_pendants_is_shellable_cone(sqp, decision_engine, homology_engine) -> None:
    delta = total_cut_complex(sqp, 3)

    shelling = decision_engine.find_shelling(delta)
    assert shelling.shellable
    assert is_shelling_order(delta, [mask_of(f) for f in shelling.order])

    certificate = decision_engine.contractibility_certificate(delta)
    assert certificate.kind is ContractibilityKind.CONE
    assert certificate.vertex == 3
    assert homology_engine.betti(delta).is_acyclic()


def test_cycle_is_not_shellable(decision_engine, homology_engine) -> None:
    delta = total_cut_complex(cycle(6), 2)
    assert not decision_engine.find_shelling(delta).shellable

    obstruction = decision_engine.non_shellability_obstruction(delta, homology_engine.betti(delta))
    assert obstruction is not None
    assert obstruction.dimension == 2
    assert obstruction.top_dimension == 3


def test_obstruction_is_absent_for_spheres(decision_engine, homology_engine) -> None:
    delta = boundary_of_simplex(4, full_mask(4))
    assert decision_engine.non_shellability_obstruction(delta, homology_engine.betti(delta)) is None
    void = SimplicialComplex.void(3)
    assert decision_engine.non_shellability_obstruction(void, homology_engine.betti(void)) is None


def test_obstruction_requires_pure_complex(decision_engine, homology_engine) -> None:
    delta = _complex(4, [0, 1, 2], [3])
    with pytest.raises(InvalidInputError):
        decision_engine.non_shellability_obstruction(delta, homology_engine.betti(delta))


def test_shelling_of_trivial_complexes(decision_engine) -> None:
    assert decision_engine.find_shelling(SimplicialComplex.void(3)).order == []
    assert decision_engine.find_shelling(SimplicialComplex.empty_face(3)).order == [[]]
    assert decision_engine.find_shelling(simplex(3, full_mask(3))).order == [[0, 1, 2]]


def test_shelling_facet_cap(decision_engine) -> None:
    delta = total_cut_complex(edgeless(7), 3)
    with pytest.raises(ResourceCapExceeded):
        decision_engine.find_shelling(delta, facet_cap=5)


def test_is_shelling_order() -> None:
    delta = _complex(4, [0, 1], [1, 2], [2, 3])
    assert is_shelling_order(delta, [mask_of([0, 1]), mask_of([1, 2]), mask_of([2, 3])])
    assert not is_shelling_order(delta, [mask_of([0, 1]), mask_of([2, 3]), mask_of([1, 2])])
    assert not is_shelling_order(delta, [mask_of([0, 1]), mask_of([1, 2])])


def test_vertex_decomposability_base_cases(decision_engine) -> None:
    for delta in (SimplicialComplex.void(3), SimplicialComplex.empty_face(3), simplex(3, full_mask(3))):
        assert decision_engine.is_vertex_decomposable(delta).decomposable


def test_non_pure_complex_is_not_vertex_decomposable(decision_engine) -> None:
    result = decision_engine.is_vertex_decomposable(_complex(4, [0, 1, 2], [3]))
    assert not result.decomposable
    assert result.reason


def test_vertex_decomposability_of_skeleton(decision_engine) -> None:
    delta = skeleton(simplex(5, full_mask(5)), 2)
    result = decision_engine.is_vertex_decomposable(delta)
    assert result.decomposable
    assert result.tree.vertex is not None


def test_cycle_is_not_vertex_decomposable(decision_engine) -> None:
    assert not decision_engine.is_vertex_decomposable(total_cut_complex(cycle(6), 2)).decomposable


def test_chordal_graphs_are_vertex_decomposable(decision_engine) -> None:
    rng = np.random.default_rng(random_seed)
    for n in range(2, 8):
        G = random_chordal_graph(n, rng)
        assert is_chordal(G)
        for k in range(1, n + 1):
            delta = total_cut_complex(G, k)
            assert decision_engine.is_vertex_decomposable(delta).decomposable


@pytest.mark.parametrize("m, n, k, shellable", [(2, 3, 3, True), (2, 2, 2, False), (2, 3, 2, False)])
def test_bipartite_shellability(decision_engine, m, n, k, shellable) -> None:
    delta = total_cut_complex(complete_bipartite(m, n), k)
    assert decision_engine.find_shelling(delta).shellable is shellable


def test_contractibility_certificates(decision_engine) -> None:
    single = decision_engine.contractibility_certificate(simplex(3, full_mask(3)))
    assert single.kind is ContractibilityKind.SINGLE_FACET
    assert decision_engine.contractibility_certificate(SimplicialComplex.void(3)) is None
    assert decision_engine.contractibility_certificate(boundary_of_simplex(3, full_mask(3))) is None


def test_morse_point_certificate() -> None:
    # путь из трех ребер: не конус, но лексикографическое паросочетание стягивает его
    delta = _complex(4, [0, 1], [1, 2], [2, 3])
    certificate = DecisionEngine().contractibility_certificate(delta)
    assert certificate.kind is ContractibilityKind.MORSE_POINT
    assert certificate.schedule == [0, 1, 2, 3]


def test_explicit_shelling_of_square_with_pendants(sqp) -> None:
    delta = total_cut_complex(sqp, 3)
    order = [mask_of(f) for f in ([0, 1, 3], [0, 2, 3], [1, 2, 3], [1, 3, 4], [1, 3, 5])]
    assert is_shelling_order(delta, order)
    assert not is_shelling_order(delta, [order[1], order[3], order[0], order[2], order[4]])


def test_decomposable_implies_shellable_with_top_homology(decision_engine, homology_engine) -> None:
    rng = np.random.default_rng(random_seed)
    shellable_seen = 0
    for _ in range(40):
        n = int(rng.integers(2, 7))
        edges = [pair for pair in combinations(range(n), 2) if rng.random() < 0.4]
        G = make_graph(n, edges)
        for k in range(2, independence_number(G) + 1):
            delta = total_cut_complex(G, k)
            if delta.num_facets > decision_engine.facet_cap:
                continue
            shelling = decision_engine.find_shelling(delta)
            if decision_engine.is_vertex_decomposable(delta).decomposable:
                assert shelling.shellable
            if shelling.shellable:
                shellable_seen += 1
                assert is_shelling_order(delta, [mask_of(f) for f in shelling.order])
                nonzero = homology_engine.betti(delta).nonzero()
                assert set(nonzero) <= {delta.dimension}
    assert shellable_seen > 0


def test_links_of_chordal_complexes_are_shellable(decision_engine) -> None:
    rng = np.random.default_rng(random_seed)
    checked = 0
    for n in range(2, 8):
        G = random_chordal_graph(n, rng)
        for k in range(2, independence_number(G) + 1):
            delta = total_cut_complex(G, k)
            for face in delta.face_index().all_faces():
                lk = link(delta, face)
                if lk.num_facets > decision_engine.facet_cap:
                    continue
                assert decision_engine.find_shelling(lk).shellable
                checked += 1
    assert checked > 0


@pytest.mark.parametrize("k", [2, 3, 4])
def test_paths_have_contractibility_certificates(decision_engine, k) -> None:
    single = decision_engine.contractibility_certificate(total_cut_complex(path(2 * k - 1), k))
    assert single.kind is ContractibilityKind.SINGLE_FACET
    for n in range(2 * k - 1, 11):
        assert decision_engine.contractibility_certificate(total_cut_complex(path(n), k)) is not None
