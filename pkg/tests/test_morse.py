from itertools import combinations

import numpy as np
import pytest

from core.errors import InvalidInputError
from domain.bitsets import bits_of, full_mask, mask_of
from domain.complexes import SimplicialComplex, boundary_of_simplex, simplex
from domain.cuts import total_cut_complex
from domain.graphs import complete_bipartite, cycle, grid, make_graph, prism, squared_cycle
from models.certificate import CertificateKind
from models.harness import GraphFamily, ScheduleFamily
from services.morse import Matching, critical_euler, lex_schedule, preset_for_graph, preset_schedule

random_seed = 20231


def _report(engine, delta, schedule, **kwargs):
    return engine.morse_report(delta, engine.element_matching_sequence(delta, schedule), **kwargs)


def test_prism_critical_faces(morse_engine) -> None:
    delta = total_cut_complex(prism(3), 2)
    report = _report(morse_engine, delta, preset_schedule(ScheduleFamily.PRISM, [3]))
    assert report.critical_faces == [[1, 3, 4], [2, 3, 5]]
    assert report.certificate is CertificateKind.WEDGE_OF_SPHERES
    assert (report.sphere_dim, report.sphere_count) == (2, 2)


def test_grid_critical_faces(morse_engine) -> None:
    delta = total_cut_complex(grid(3, 3), 2)
    report = _report(morse_engine, delta, preset_schedule(ScheduleFamily.GRID, [3, 3]))
    complements = ([0, 3, 4], [0, 4, 5], [0, 6, 7], [0, 7, 8])
    expected = sorted(full_mask(9) & ~mask_of(s) for s in complements)
    assert report.critical_faces == [bits_of(face) for face in expected]
    assert report.cells_per_dim == {5: 4}


def test_bipartite_wedge(morse_engine, homology_engine) -> None:
    delta = total_cut_complex(complete_bipartite(3, 3), 2)
    betti = homology_engine.betti(delta)
    report = _report(morse_engine, delta, preset_schedule(ScheduleFamily.BIPARTITE, [3, 3]), betti=betti)
    assert report.certificate is CertificateKind.WEDGE_OF_SPHERES
    assert (report.sphere_dim, report.sphere_count) == (2, 4)
    assert report.morse_inequalities_ok


@pytest.mark.parametrize("n, k", [(6, 2), (7, 2), (8, 3), (9, 4)])
def test_cycle_has_one_critical_cell(morse_engine, n, k) -> None:
    delta = total_cut_complex(cycle(n), k)
    report = _report(morse_engine, delta, preset_schedule(ScheduleFamily.CYCLE, [n, k]))
    assert report.cells_per_dim == {n - 2 * k: 1}
    assert report.empty_matched


def test_squared_cycle_critical_face(morse_engine) -> None:
    n = 9
    delta = total_cut_complex(squared_cycle(n), 2)
    report = _report(morse_engine, delta, preset_schedule(ScheduleFamily.SQUARED_CYCLE, [n]))
    assert report.critical_faces == [bits_of(full_mask(n) & ~mask_of([0, n - 4, n - 2]))]


def test_simplex_matches_to_a_point(morse_engine) -> None:
    delta = simplex(4, full_mask(4))
    report = _report(morse_engine, delta, lex_schedule(delta))
    assert report.total_critical == 0
    assert report.empty_matched
    assert report.certificate is CertificateKind.CONTRACTIBLE


def test_empty_schedule_leaves_everything_critical(morse_engine) -> None:
    delta = boundary_of_simplex(3, full_mask(3))
    report = _report(morse_engine, delta, [])
    assert report.cells_per_dim == {0: 3, 1: 3}
    assert not report.empty_matched
    assert report.certificate is CertificateKind.INCONCLUSIVE


def test_critical_euler(morse_engine, homology_engine) -> None:
    delta = total_cut_complex(cycle(7), 2)
    for schedule in ([], [0], [0, 3], lex_schedule(delta)):
        report = _report(morse_engine, delta, schedule)
        euler = homology_engine.euler_characteristic_reduced(delta)
        expected = euler + (0 if report.empty_matched else 1)
        assert critical_euler(report) == expected


def test_cyclic_matching_is_rejected(morse_engine) -> None:
    delta = boundary_of_simplex(3, full_mask(3))
    pairs = (
        (mask_of([0]), mask_of([0, 1])),
        (mask_of([1]), mask_of([1, 2])),
        (mask_of([2]), mask_of([0, 2])),
    )
    matching = Matching(schedule=(), pairs=pairs, critical=(0,))
    assert not morse_engine.verify_acyclic(delta, matching)
    with pytest.raises(InvalidInputError):
        morse_engine.morse_report(delta, matching)


def test_non_cover_pair_is_rejected(morse_engine) -> None:
    delta = simplex(3, full_mask(3))
    matching = Matching(schedule=(), pairs=((mask_of([0]), mask_of([0, 1, 2])),))
    with pytest.raises(InvalidInputError):
        morse_engine.verify_acyclic(delta, matching)


def test_element_matchings_are_acyclic(morse_engine) -> None:
    delta = total_cut_complex(grid(2, 4), 2)
    matching = morse_engine.element_matching_sequence(delta, [3, 1, 5, 0])
    assert morse_engine.verify_acyclic(delta, matching)


@pytest.mark.parametrize("schedule", [[0, 0], [7], [-1]])
def test_invalid_schedule(morse_engine, schedule) -> None:
    delta = simplex(3, full_mask(3))
    with pytest.raises(InvalidInputError):
        morse_engine.element_matching_sequence(delta, schedule)


def test_void_gives_no_certificate(morse_engine) -> None:
    report = _report(morse_engine, SimplicialComplex.void(3), [0, 1])
    assert report.certificate is CertificateKind.INCONCLUSIVE
    assert report.matched_pairs == 0


@pytest.mark.parametrize(
    "family, params, expected",
    [
        (ScheduleFamily.BIPARTITE, [3, 4], [0, 3]),
        (ScheduleFamily.PRISM, [5], [0, 5]),
        (ScheduleFamily.CYCLE, [9, 3], [0, 1, 2, 3, 4]),
        (ScheduleFamily.GRID, [3, 4], list(range(8))),
        (ScheduleFamily.SQUARED_CYCLE, [8], [0, 1, 2, 3, 4, 6]),
        (ScheduleFamily.PATH, [4], [0, 1, 2, 3]),
    ],
)
def test_preset_schedules(family, params, expected) -> None:
    assert preset_schedule(family, params) == expected
    assert preset_schedule(family.value, params) == expected


def test_preset_schedule_errors() -> None:
    with pytest.raises(InvalidInputError):
        preset_schedule(ScheduleFamily.GRID, [3])
    with pytest.raises(InvalidInputError):
        preset_schedule("nosuch", [3])
    with pytest.raises(InvalidInputError):
        preset_for_graph(GraphFamily.COMPLETE, [4], 2)
    assert preset_for_graph(GraphFamily.CYCLE, [9], 3) == [0, 1, 2, 3, 4]


def _random_complexes(rng: np.random.Generator, count: int, max_n: int = 8):
    for i in range(count):
        n = int(rng.integers(1, max_n + 1))
        if i % 2:
            edges = [pair for pair in combinations(range(n), 2) if rng.random() < 0.4]
            G = make_graph(n, edges)
            yield total_cut_complex(G, int(rng.integers(1, n + 1)))
        else:
            facets = [int(x) for x in rng.integers(1, 1 << n, size=int(rng.integers(1, 7)))]
            yield SimplicialComplex.from_facets(n, facets)


def test_random_schedules_give_acyclic_matchings(morse_engine) -> None:
    rng = np.random.default_rng(random_seed)
    for delta in _random_complexes(rng, 60):
        n = delta.ground
        schedule = rng.permutation(n)[: int(rng.integers(0, n + 1))].tolist()
        matching = morse_engine.element_matching_sequence(delta, schedule)
        assert morse_engine.verify_acyclic(delta, matching)


def test_critical_cells_bound_betti_numbers(morse_engine, homology_engine) -> None:
    rng = np.random.default_rng(random_seed + 1)
    checked = 0
    for delta in _random_complexes(rng, 60):
        if delta.is_void:
            continue
        betti = homology_engine.betti(delta)
        schedule = rng.permutation(delta.ground).tolist()
        report = _report(morse_engine, delta, schedule, betti=betti)
        assert report.morse_inequalities_ok
        for d, value in betti.betti.items():
            if d >= 0:
                assert report.cells_per_dim.get(d, 0) >= value
        checked += 1
    assert checked > 0
