from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from core.errors import InvalidInputError, ResourceCapExceeded
from domain.bitsets import full_mask, mask_of
from domain.complexes import (
    SimplicialComplex,
    alexander_dual,
    boundary_of_simplex,
    clique_complex,
    cone,
    contains,
    deletion,
    format_complex_text,
    intersection,
    join,
    link,
    load_complex,
    parse_complex_text,
    relabel,
    save_complex,
    simplex,
    skeleton,
    star,
    suspension,
    two_points,
    union,
)
from domain.graphs import make_graph
from models.complex import ComplexKind

random_seed = 20231


def _complex(n: int, *facets: list[int]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, [mask_of(f) for f in facets])


def test_void_and_empty_face_are_different() -> None:
    void = SimplicialComplex.void(3)
    empty = SimplicialComplex.empty_face(3)
    assert void.kind is ComplexKind.VOID
    assert empty.kind is ComplexKind.EMPTY_FACE
    assert void != empty
    assert void.dimension is None
    assert empty.dimension == -1
    assert void.f_vector() == []
    assert empty.f_vector() == [1]
    assert SimplicialComplex.from_facets(3, []) == void
    assert SimplicialComplex.from_facets(3, [0]) == empty


def test_from_facets_normalizes() -> None:
    delta = SimplicialComplex.from_facets(4, [0b0011, 0b0111, 0b0011, 0b1000])
    assert delta.facets == (0b0111, 0b1000)
    assert not delta.is_pure()
    assert delta.dimension == 2
    with pytest.raises(InvalidInputError):
        SimplicialComplex.from_facets(2, [0b100])


def test_f_vector_and_faces() -> None:
    delta = boundary_of_simplex(3, full_mask(3))
    assert delta.f_vector() == [1, 3, 3]
    assert delta.faces(-1) == [0]
    assert delta.faces(0) == [1, 2, 4]
    assert delta.faces(2) == []
    with pytest.raises(InvalidInputError):
        SimplicialComplex.void(2).faces(0)


def test_face_cap_is_enforced() -> None:
    delta = simplex(12, full_mask(12))
    with pytest.raises(ResourceCapExceeded):
        delta.f_vector(cap=100)


def test_ridges_with_facet_counts() -> None:
    delta = _complex(4, [0, 1, 2], [0, 1, 3], [1, 2, 3])
    counts = dict(delta.ridges_with_facet_counts())
    assert counts[mask_of([0, 1])] == 2
    assert counts[mask_of([1, 3])] == 2
    assert counts[mask_of([0, 2])] == 1
    with pytest.raises(InvalidInputError):
        _complex(3, [0, 1], [2]).ridges_with_facet_counts()


def test_star_link_deletion() -> None:
    delta = _complex(4, [0, 1, 2], [0, 2, 3], [1, 3])
    assert star(delta, mask_of([2])) == _complex(4, [0, 1, 2], [0, 2, 3])
    assert link(delta, mask_of([0])) == _complex(4, [1, 2], [2, 3])
    assert link(delta, mask_of([0, 1, 2])) == SimplicialComplex.empty_face(4)
    assert deletion(delta, mask_of([0])) == _complex(4, [1, 2], [2, 3], [1, 3])
    assert deletion(delta, 0).is_void
    with pytest.raises(InvalidInputError):
        link(delta, mask_of([0, 1, 3]))


def test_join_cone_suspension() -> None:
    square = suspension(two_points())
    assert square.ground == 4
    assert square.f_vector() == [1, 4, 4]
    assert cone(two_points()) == _complex(3, [0, 2], [1, 2])
    assert cone(SimplicialComplex.empty_face(0)) == _complex(1, [0])
    assert join(SimplicialComplex.void(1), two_points()).is_void
    with pytest.raises(InvalidInputError):
        cone(two_points(), apex=1)


def test_skeleton() -> None:
    delta = skeleton(simplex(4, full_mask(4)), 1)
    assert delta.f_vector() == [1, 4, 6]
    assert skeleton(delta, -1) == SimplicialComplex.empty_face(4)
    mixed = _complex(4, [0, 1, 2], [3])
    assert skeleton(mixed, 0) == _complex(4, [0], [1], [2], [3])


def test_alexander_dual_edge_cases() -> None:
    n = 3
    assert alexander_dual(SimplicialComplex.void(n)) == simplex(n, full_mask(n))
    assert alexander_dual(simplex(n, full_mask(n))).is_void
    assert alexander_dual(two_points()) == SimplicialComplex.empty_face(2)


def test_alexander_dual_is_involution() -> None:
    rng = np.random.default_rng(random_seed)
    for _ in range(30):
        n = int(rng.integers(1, 7))
        facets = [int(x) for x in rng.integers(0, 1 << n, size=int(rng.integers(1, 5)))]
        delta = SimplicialComplex.from_facets(n, facets)
        assert alexander_dual(alexander_dual(delta)) == delta


def test_clique_complex_matches_networkx(to_networkx) -> None:
    rng = np.random.default_rng(random_seed)
    for _ in range(30):
        n = int(rng.integers(1, 9))
        edges = [pair for pair in combinations(range(n), 2) if rng.random() < 0.5]
        G = make_graph(n, edges)
        expected = sorted(mask_of(c) for c in nx.find_cliques(to_networkx(G)))
        assert list(clique_complex(G).facets) == expected


def test_union_intersection_contains() -> None:
    first = _complex(4, [0, 1, 2])
    second = _complex(4, [2, 3])
    both = union(first, second)
    assert both == _complex(4, [0, 1, 2], [2, 3])
    assert intersection(first, second) == _complex(4, [2])
    assert contains(both, first) and not contains(first, both)
    assert contains(first, SimplicialComplex.void(4))


def test_relabel() -> None:
    delta = _complex(2, [0, 1])
    assert relabel(delta, [1, 3], 4) == _complex(4, [1, 3])
    with pytest.raises(InvalidInputError):
        relabel(delta, [1, 1], 4)


def test_complex_text_format(tmp_path) -> None:
    delta = _complex(5, [0, 1, 4], [2, 3])
    text = format_complex_text(delta)
    assert text == "5\n2 3\n0 1 4\n"
    assert parse_complex_text(text) == delta
    assert parse_complex_text("3\n-\n") == SimplicialComplex.empty_face(3)
    assert parse_complex_text("").is_void

    target = tmp_path / "delta.txt"
    save_complex(delta, str(target))
    assert load_complex(str(target)) == delta


def _random_complexes(count: int, max_n: int):
    rng = np.random.default_rng(random_seed)
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        facets = [int(x) for x in rng.integers(1, 1 << n, size=int(rng.integers(1, 6)))]
        yield SimplicialComplex.from_facets(n, facets)


def _is_antichain(delta: SimplicialComplex) -> bool:
    return all(a == b or a & b != a for a in delta.facets for b in delta.facets)


def test_star_is_join_of_face_and_link() -> None:
    for delta in _random_complexes(25, max_n=8):
        n = delta.ground
        for sigma in delta.face_index().all_faces():
            mapping = [v if sigma >> v & 1 else n + v for v in range(n)]
            expected = join(simplex(n, sigma), link(delta, sigma))
            assert relabel(star(delta, sigma), mapping, 2 * n) == expected


def test_star_and_deletion_cover_the_complex() -> None:
    for delta in _random_complexes(40, max_n=7):
        for v in range(delta.ground):
            vertex = 1 << v
            if not delta.contains_face(vertex):
                continue
            st = star(delta, vertex)
            dl = deletion(delta, vertex)
            assert union(st, dl) == delta
            assert intersection(st, dl) == link(delta, vertex)


def test_join_f_vector_is_convolution() -> None:
    complexes = list(_random_complexes(12, max_n=6))
    for first, second in zip(complexes, complexes[1:]):
        expected = np.convolve(first.f_vector(), second.f_vector()).tolist()
        assert join(first, second).f_vector() == expected


def test_constructors_keep_facets_an_antichain() -> None:
    rng = np.random.default_rng(random_seed)
    complexes = list(_random_complexes(20, max_n=6))
    for delta, other in zip(complexes, complexes[1:]):
        sigma = delta.facets[0] & ~(1 << (delta.facets[0].bit_length() - 1))
        n = delta.ground
        edges = [pair for pair in combinations(range(n), 2) if rng.random() < 0.5]
        results = [
            star(delta, sigma),
            link(delta, sigma),
            deletion(delta, delta.facets[-1]),
            join(delta, other),
            cone(delta),
            suspension(delta),
            skeleton(delta, 1),
            alexander_dual(delta),
            union(delta, other),
            intersection(delta, other),
            relabel(delta, list(reversed(range(n))), n),
            clique_complex(make_graph(n, edges)),
        ]
        assert all(_is_antichain(result) for result in results)
