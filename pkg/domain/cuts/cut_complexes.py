"""
Построение тотальных k-разрезных комплексов Δᵗ_k(G) и k-разрезных
комплексов Δ_k(G), а также структурные рекурсии между ними.
"""

from itertools import combinations

import logging

from core.config import settings
from core.errors import InvalidInputError, ResourceCapExceeded
from domain.bitsets import full_mask, iter_bits, mask_of
from domain.complexes import SimplicialComplex, cone, relabel, union
from domain.graphs import Graph, add_isolated_vertex, independent_sets, is_connected

logger = logging.getLogger(__name__)


def total_cut_complex(G: Graph, k: int) -> SimplicialComplex:
    """
    Δᵗ_k(G): фасеты - дополнения независимых множеств размера k.

    Независимые множества идут потоком, грани не материализуются.
    Если k > α(G), комплекс void; иначе он чистый размерности n-k-1.
    """
    if k < 1:
        raise InvalidInputError(f"k должно быть >= 1, получено {k}")
    full = G.vertices
    facets = [full & ~independent for independent in independent_sets(G, k)]
    facets.sort()
    return SimplicialComplex(G.n, tuple(facets))


def cut_complex(G: Graph, k: int) -> SimplicialComplex:
    """Δ_k(G): фасеты - дополнения k-множеств с несвязным индуцированным подграфом"""
    if k < 2:
        raise InvalidInputError(f"Для k-разрезного комплекса k должно быть >= 2, получено {k}")
    full = G.vertices
    facets = [
        full & ~subset
        for subset in (mask_of(chosen) for chosen in combinations(range(G.n), k))
        if not is_connected(G, subset)
    ]
    facets.sort()
    return SimplicialComplex(G.n, tuple(facets))


def next_total_from_ridges(delta: SimplicialComplex, k: int) -> SimplicialComplex:
    """
    Комплекс, фасеты которого - гребни Δ, лежащие ровно в k+1 фасетах.

    Операция чисто комбинаторная: для Δ = Δᵗ_k(G) результат равен Δᵗ_{k+1}(G).
    """
    if k < 2:
        raise InvalidInputError(f"k должно быть >= 2, получено {k}")
    if not delta.is_pure():
        raise InvalidInputError("Рекурсия по гребням определена только для чистого комплекса")
    if delta.is_void:
        return SimplicialComplex.void(delta.ground)
    ridges = [ridge for ridge, count in delta.ridges_with_facet_counts() if count == k + 1]
    return SimplicialComplex(delta.ground, tuple(sorted(ridges)))


def verify_isolated_decomposition(G: Graph, k: int) -> bool:
    """
    Проверяет Δᵗ_k(G ⊔ v) = Δᵗ_{k-1}(G) ∪ (Δᵗ_k(G) * v) точным сравнением фасет.
    """
    if k < 2:
        raise InvalidInputError(f"k должно быть >= 2, получено {k}")
    extended = add_isolated_vertex(G)
    apex = G.n
    lower = SimplicialComplex.from_facets(extended.n, total_cut_complex(G, k - 1).facets)
    upper = cone(total_cut_complex(G, k), apex=apex)
    expected = union(lower, upper)
    actual = total_cut_complex(extended, k)
    if actual != expected:
        logger.info("Разложение по изолированной вершине не выполнено: %s, k=%d", G.label(), k)
    return actual == expected


def lift_from_induced(delta: SimplicialComplex, kept: int, n: int) -> SimplicialComplex:
    """
    Переносит комплекс индуцированного подграфа на исходный носитель.

    Вершина i комплекса delta переходит в i-ю по возрастанию вершину kept.
    """
    mapping = list(iter_bits(kept))
    if len(mapping) != delta.ground:
        raise InvalidInputError(
            f"Размер kept ({len(mapping)}) не совпадает с носителем комплекса ({delta.ground})"
        )
    return relabel(delta, mapping, n)


def no_independent_k_subsets(G: Graph, k: int) -> SimplicialComplex:
    """
    I_k(G): множества вершин без независимых k-подмножеств.

    Минимальные не-грани - независимые k-множества, поэтому Δᵗ_k(G)
    двойственен I_k(G) по Александеру. Перебор всех подмножеств носителя.
    """
    if k < 1:
        raise InvalidInputError(f"k должно быть >= 1, получено {k}")
    subsets = 1 << G.n
    if subsets > settings.CUTCOMPLEX_FACE_CAP:
        raise ResourceCapExceeded("подмножеств носителя", subsets, settings.CUTCOMPLEX_FACE_CAP)
    full = full_mask(G.n)

    def is_face(mask: int) -> bool:
        return not has_independent_set_within(G, k, mask)

    facets = [
        mask
        for mask in range(subsets)
        if is_face(mask) and all(not is_face(mask | (1 << x)) for x in iter_bits(full & ~mask))
    ]
    return SimplicialComplex.from_facets(G.n, facets)


def has_independent_set_within(G: Graph, k: int, within: int) -> bool:
    return next(independent_sets(G, k, within=within), None) is not None
