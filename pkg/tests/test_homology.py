import numpy as np
import pytest

from core.errors import ResourceCapExceeded
from domain.bitsets import full_mask, mask_of
from domain.complexes import SimplicialComplex, boundary_of_simplex, simplex, suspension, two_points
from domain.cuts import total_cut_complex
from domain.graphs import complete_bipartite, cycle, edgeless, prism
from services.homology import HomologyEngine

random_seed = 20231

# Минимальная триангуляция проективной плоскости (6 вершин)
RP2_FACETS = [
    [0, 1, 2], [0, 1, 3], [0, 2, 4], [0, 3, 5], [0, 4, 5],
    [1, 2, 5], [1, 3, 4], [1, 4, 5], [2, 3, 4], [2, 3, 5],
]


def _complex(n: int, facets) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, [mask_of(f) for f in facets])


def test_void_and_empty_face(homology_engine) -> None:
    void = homology_engine.betti(SimplicialComplex.void(3))
    assert void.void and void.nonzero() == {}
    assert homology_engine.euler_characteristic_reduced(SimplicialComplex.void(3)) == 0

    empty = homology_engine.betti(SimplicialComplex.empty_face(3))
    assert empty.nonzero() == {-1: 1}
    assert empty.euler_reduced == -1


def test_simplex_is_acyclic(homology_engine) -> None:
    report = homology_engine.betti(simplex(5, full_mask(5)))
    assert report.is_acyclic()
    assert report.euler_reduced == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_boundary_of_simplex_is_sphere(homology_engine, n) -> None:
    report = homology_engine.betti(boundary_of_simplex(n, full_mask(n)))
    assert report.single_sphere() == (n - 2, 1)


def test_two_points_and_suspension(homology_engine) -> None:
    assert homology_engine.betti(two_points()).nonzero() == {0: 1}
    assert homology_engine.betti(suspension(two_points())).nonzero() == {1: 1}


def test_boundary_squares_to_zero(homology_engine) -> None:
    delta = total_cut_complex(prism(4), 2)
    for d in range(0, delta.dimension + 1):
        assert homology_engine.compose_is_zero(delta, d)


def test_boundary_matrix_shape(homology_engine) -> None:
    delta = boundary_of_simplex(3, full_mask(3))
    matrix = homology_engine.boundary_matrix(delta, 1)
    assert matrix.shape == (3, 3)
    assert all(sorted(value for _, value in column) == [-1, 1] for column in matrix.columns)
    augmentation = homology_engine.boundary_matrix(delta, 0)
    assert augmentation.shape == (1, 3)


def test_projective_plane_torsion(homology_engine) -> None:
    delta = _complex(6, RP2_FACETS)
    rational = homology_engine.betti(delta)
    assert rational.is_acyclic()
    assert not rational.torsion_checked

    oracle = homology_engine.homology_oracle_snf(delta)
    assert oracle.is_acyclic()
    assert oracle.torsion_found
    assert oracle.torsion_primes == [2]


def test_snf_agrees_with_modular_ranks(homology_engine) -> None:
    rng = np.random.default_rng(random_seed)
    for _ in range(25):
        n = int(rng.integers(2, 8))
        facets = [int(x) for x in rng.integers(1, 1 << n, size=int(rng.integers(1, 6)))]
        delta = SimplicialComplex.from_facets(n, facets)
        fast = homology_engine.betti(delta)
        exact = homology_engine.homology_oracle_snf(delta)
        assert fast.betti == exact.betti
        assert not exact.torsion_found


def test_euler_characteristic_matches_betti(homology_engine) -> None:
    delta = total_cut_complex(cycle(8), 3)
    report = homology_engine.betti(delta)
    alternating = sum(b if d % 2 == 0 else -b for d, b in report.betti.items())
    assert alternating == report.euler_reduced == homology_engine.euler_characteristic_reduced(delta)


def test_edgeless_graph_betti(homology_engine) -> None:
    report = homology_engine.betti(total_cut_complex(edgeless(6), 3))
    assert report.nonzero() == {2: 10}


def test_bipartite_betti(homology_engine) -> None:
    report = homology_engine.betti(total_cut_complex(complete_bipartite(3, 4), 2))
    assert report.nonzero() == {3: 6}


def test_face_cap() -> None:
    engine = HomologyEngine(face_cap=50)
    with pytest.raises(ResourceCapExceeded):
        engine.betti(total_cut_complex(edgeless(8), 2))
