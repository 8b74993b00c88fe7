"""
Структурные наборы: тождества между комплексами разных графов и k,
проверяемые на корпусе графов точным сравнением фасет или гомологии.
"""

import logging

from domain.bitsets import bits_of, iter_bits, mask_of
from domain.complexes import SimplicialComplex, contains, deletion, link, star
from domain.cuts import (
    forced_facets,
    lift_from_induced,
    maximal_realizing_graph,
    next_total_from_ridges,
    find_realization,
    total_cut_complex,
    verify_isolated_decomposition,
)
from domain.graphs import (
    Graph,
    add_isolated_vertex,
    complete_bipartite,
    delete_vertices,
    simplicial_vertices,
    square_with_pendants,
)
from schemas.harness import SuiteCase
from services.homology import HomologyEngine, get_homology_engine
from .cases import Plan, betti_summary, corpus_graph, corpus_plan, make_case
from .ranges import Ranges

logger = logging.getLogger(__name__)

# Лимит граней для сравнения с SNF-оракулом
ORACLE_FACE_CAP = 2 ** 14


def _lifted_total(G: Graph, removed: int, k: int) -> SimplicialComplex:
    """Δᵗ_k(G ∖ removed) на исходном носителе G"""
    kept = G.vertices & ~removed
    return lift_from_induced(total_cut_complex(delete_vertices(G, removed), k), kept, G.n)


def _suspension_vertex(G: Graph) -> int:
    """Младшая симплициальная вершина с непустой окрестностью или -1"""
    for v in iter_bits(simplicial_vertices(G)):
        if G.neighbors(v):
            return v
    return -1


def ridge_facet_case(graph: int, k: int) -> SuiteCase:
    G = corpus_graph(graph)
    delta = total_cut_complex(G, k)
    direct = total_cut_complex(G, k + 1)
    expected = {"facets": [bits_of(face) for face in direct.facets], "nested": True}
    from_ridges = next_total_from_ridges(delta, k)
    actual = {"facets": [bits_of(face) for face in from_ridges.facets], "nested": contains(delta, direct)}
    return make_case({"graph": graph, "k": k}, expected, actual, note=G.label())


def isolated_decomposition_case(graph: int, k: int) -> SuiteCase:
    G = corpus_graph(graph)
    return make_case({"graph": graph, "k": k}, True, verify_isolated_decomposition(G, k), note=G.label())


def link_lemma_case(graph: int, k: int) -> SuiteCase:
    """lk W = Δᵗ_k(G ∖ W) для каждой грани W, включая пустую"""
    G = corpus_graph(graph)
    delta = total_cut_complex(G, k)
    checked = 0
    mismatches = []
    if not delta.is_void:
        for W in delta.face_index().all_faces():
            checked += 1
            if link(delta, W) != _lifted_total(G, W, k):
                mismatches.append(bits_of(W))
    return make_case(
        {"graph": graph, "k": k},
        {"faces_checked": checked, "mismatches": []},
        {"faces_checked": checked, "mismatches": mismatches},
        note=G.label(),
    )


def deletion_lemma_case(graph: int, k: int) -> SuiteCase:
    """del v = st N(v) в Δᵗ_{k-1}(G ∖ v) для каждой симплициальной вершины v"""
    G = corpus_graph(graph)
    delta = total_cut_complex(G, k)
    vertices = bits_of(simplicial_vertices(G))
    mismatches = []
    for v in vertices:
        lower = _lifted_total(G, 1 << v, k - 1)
        neighborhood = G.neighbors(v)
        if lower.contains_face(neighborhood):
            expected = star(lower, neighborhood)
        else:
            expected = SimplicialComplex.void(G.n)
        if deletion(delta, 1 << v) != expected:
            mismatches.append(v)
    return make_case(
        {"graph": graph, "k": k},
        {"vertices": vertices, "mismatches": []},
        {"vertices": vertices, "mismatches": mismatches},
        note=G.label(),
    )


def suspension_case(graph: int, k: int) -> SuiteCase:
    """
    Для симплициальной v с N(v) ≠ ∅: Δᵗ_k(G) ≃ Σ Δᵗ_k(G ∖ v), если
    Δᵗ_k(G ∖ v) не void; иначе Δᵗ_k(G) стягиваем или void.
    """
    G = corpus_graph(graph)
    v = _suspension_vertex(G)
    engine = get_homology_engine()
    smaller = engine.betti(total_cut_complex(delete_vertices(G, 1 << v), k))
    whole = engine.betti(total_cut_complex(G, k))
    if smaller.void:
        expected = "void_or_contractible"
        acyclic = whole.void or whole.is_acyclic()
        actual = "void_or_contractible" if acyclic else betti_summary(whole)
    else:
        expected = {str(d + 1): b for d, b in smaller.nonzero().items()}
        actual = betti_summary(whole)
    return make_case({"graph": graph, "k": k}, expected, actual, note=f"{G.label()}, v={v}")


def les_euler_case(graph: int, k: int) -> SuiteCase:
    """χ̃(Δᵗ_k(G ⊔ v)) = χ̃(Δᵗ_{k-1}(G)) - χ̃(Δᵗ_k(G))"""
    G = corpus_graph(graph)
    engine = get_homology_engine()
    expected = (
        engine.euler_characteristic_reduced(total_cut_complex(G, k - 1))
        - engine.euler_characteristic_reduced(total_cut_complex(G, k))
    )
    actual = engine.euler_characteristic_reduced(total_cut_complex(add_isolated_vertex(G), k))
    return make_case({"graph": graph, "k": k}, expected, actual, note=G.label())


def oracle_case(graph: int, k: int) -> SuiteCase:
    """Модульные ранги против нормальной формы Смита; кручения быть не должно"""
    G = corpus_graph(graph)
    delta = total_cut_complex(G, k)
    engine = get_homology_engine()
    oracle = HomologyEngine(face_cap=engine.face_cap, snf_face_cap=ORACLE_FACE_CAP)
    fast = engine.betti(delta)
    exact = oracle.homology_oracle_snf(delta)
    return make_case(
        {"graph": graph, "k": k},
        {"betti": betti_summary(fast), "torsion": False},
        {"betti": betti_summary(exact), "torsion": exact.torsion_found},
        note=G.label(),
    )


def _forcing_case() -> tuple:
    """Фасеты {0,4,5}, {0,2,3}, {0,1,2} при n=6, k=3 вынуждают фасету {0,2,5}"""
    facets = [mask_of(s) for s in ([0, 4, 5], [0, 2, 3], [0, 1, 2])]
    forced = forced_facets(facets, 6, 3)
    present = forced is not None and mask_of([0, 2, 5]) in forced.facets
    return {"forced": [0, 2, 5]}, {"forced": [0, 2, 5] if present else None}


def _exact_witness_case() -> tuple:
    """Δᵗ₃ квадрата с висячими вершинами реализуется точно"""
    target = total_cut_complex(square_with_pendants(), 3)
    witness = find_realization(target.facets, 6, 3, exact=True)
    return True, witness is not None and total_cut_complex(witness, 3) == target


def _disjoint_facets_case() -> tuple:
    """Две непересекающиеся фасеты {0,1,2} и {3,4,5}: максимальный граф - K_{3,3}"""
    facets = [mask_of([0, 1, 2]), mask_of([3, 4, 5])]
    maximal = maximal_realizing_graph(facets, 6, 3)
    expected = complete_bipartite(3, 3).edges()
    actual = maximal.edges() if maximal is not None else None
    exact = maximal is not None and total_cut_complex(maximal, 3).facets == tuple(sorted(facets))
    return {"edges": expected, "exact": True}, {"edges": actual, "exact": exact}


_REALIZABILITY_CASES = (_forcing_case, _exact_witness_case, _disjoint_facets_case)


def realizability_case(case: int) -> SuiteCase:
    check = _REALIZABILITY_CASES[case]
    expected, actual = check()
    return make_case({"case": case}, expected, actual, note=check.__doc__)


def plan_ridge_facet(ranges: Ranges) -> Plan:
    return corpus_plan(ridge_facet_case, ranges, k_min=2)


def plan_isolated_decomposition(ranges: Ranges) -> Plan:
    return corpus_plan(isolated_decomposition_case, ranges, k_min=2, k_extra=1)


def plan_link_lemma(ranges: Ranges) -> Plan:
    return corpus_plan(link_lemma_case, ranges, k_min=2)


def plan_deletion_lemma(ranges: Ranges) -> Plan:
    return corpus_plan(deletion_lemma_case, ranges, k_min=2, where=lambda G: simplicial_vertices(G) != 0)


def plan_suspension(ranges: Ranges) -> Plan:
    return corpus_plan(suspension_case, ranges, k_min=2, where=lambda G: _suspension_vertex(G) >= 0)


def plan_les_euler(ranges: Ranges) -> Plan:
    return corpus_plan(les_euler_case, ranges, k_min=2, k_extra=1)


def plan_oracle(ranges: Ranges) -> Plan:
    return corpus_plan(oracle_case, ranges, k_min=1)


def plan_realizability(ranges: Ranges) -> Plan:
    cases = ranges.get("case", range(len(_REALIZABILITY_CASES)))
    return [(realizability_case, {"case": case}) for case in cases if 0 <= case < len(_REALIZABILITY_CASES)]
