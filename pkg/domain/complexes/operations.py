"""
Конструкции над комплексами: звезда, линк, удаление, джойн, конус,
надстройка, остов, двойственность Александера, комплекс клик.

Все функции возвращают новые комплексы в форме фасет.
"""

from itertools import combinations
from typing import Optional, Sequence

from core.config import settings
from core.errors import InvalidInputError
from domain.bitsets import full_mask, iter_bits, is_subset, format_mask, mask_of
from domain.graphs import Graph
from .complex import SimplicialComplex


def simplex(n: int, sigma: int) -> SimplicialComplex:
    """Полный симплекс на σ (одна фасета)"""
    return SimplicialComplex.from_facets(n, [sigma])


def boundary_of_simplex(n: int, sigma: int) -> SimplicialComplex:
    """Граница симплекса σ: все собственные подмножества σ"""
    return SimplicialComplex.from_facets(n, [sigma ^ (1 << v) for v in iter_bits(sigma)])


def _require_face(delta: SimplicialComplex, sigma: int) -> None:
    if not delta.contains_face(sigma):
        raise InvalidInputError(f"{format_mask(sigma)} не является гранью комплекса")


def star(delta: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Замкнутая звезда: порождена фасетами, содержащими σ"""
    _require_face(delta, sigma)
    return SimplicialComplex.from_facets(
        delta.ground, [face for face in delta.facets if is_subset(sigma, face)]
    )


def link(delta: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Линк: F ∖ σ для фасет F ⊇ σ"""
    _require_face(delta, sigma)
    return SimplicialComplex.from_facets(
        delta.ground, [face & ~sigma for face in delta.facets if is_subset(sigma, face)]
    )


def deletion(delta: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """
    Грани, не содержащие σ.

    Удаление пустого множества уничтожает все грани и дает void.
    """
    if sigma == 0:
        return SimplicialComplex.void(delta.ground)
    candidates = []
    for face in delta.facets:
        if not is_subset(sigma, face):
            candidates.append(face)
        else:
            candidates.extend(face ^ (1 << v) for v in iter_bits(sigma))
    return SimplicialComplex.from_facets(delta.ground, candidates)


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """Джойн; носитель второго комплекса сдвигается на first.ground"""
    shift = first.ground
    facets = [a | (b << shift) for a in first.facets for b in second.facets]
    return SimplicialComplex.from_facets(first.ground + second.ground, facets)


def cone(delta: SimplicialComplex, apex: Optional[int] = None) -> SimplicialComplex:
    """Конус с новой вершиной apex (по умолчанию - следующая за носителем)"""
    apex = delta.ground if apex is None else apex
    if apex < 0:
        raise InvalidInputError(f"Номер вершины конуса должен быть >= 0, получено {apex}")
    if delta.vertices() >> apex & 1:
        raise InvalidInputError(f"Вершина {apex} уже используется комплексом")
    ground = max(delta.ground, apex + 1)
    return SimplicialComplex.from_facets(ground, [face | (1 << apex) for face in delta.facets])


def two_points() -> SimplicialComplex:
    """S⁰: две изолированные вершины"""
    return SimplicialComplex.from_facets(2, [0b01, 0b10])


def suspension(delta: SimplicialComplex) -> SimplicialComplex:
    """Надстройка: джойн с S⁰ (две новые вершины в конце носителя)"""
    return join(delta, two_points())


def skeleton(delta: SimplicialComplex, d: int) -> SimplicialComplex:
    """Все грани размерности <= d (фасеты меньшей размерности сохраняются)"""
    if d < -1:
        raise InvalidInputError(f"Размерность остова должна быть >= -1, получено {d}")
    size = d + 1
    candidates = set()
    for face in delta.facets:
        if face.bit_count() <= size:
            candidates.add(face)
            continue
        for chosen in combinations(list(iter_bits(face)), size):
            candidates.add(mask_of(chosen))
    return SimplicialComplex.from_facets(delta.ground, candidates)


def alexander_dual(delta: SimplicialComplex, cap: Optional[int] = None) -> SimplicialComplex:
    """
    Комбинаторный двойственный по Александеру: {F ⊆ [n] : [n] ∖ F ∉ Δ}.

    Фасеты двойственного - дополнения минимальных не-граней Δ.
    Двойственный к void - полный симплекс, к полному симплексу - void.
    """
    n = delta.ground
    full = full_mask(n)
    if delta.is_void:
        return SimplicialComplex.from_facets(n, [full])

    index = delta.face_index(settings.CUTCOMPLEX_DUAL_FACE_CAP if cap is None else cap)
    is_face = set(index.all_faces())
    minimal_non_faces = set()
    for face in is_face:
        for x in iter_bits(full & ~face):
            candidate = face | (1 << x)
            if candidate in is_face or candidate in minimal_non_faces:
                continue
            if all(candidate ^ (1 << y) in is_face for y in iter_bits(candidate)):
                minimal_non_faces.add(candidate)
    return SimplicialComplex.from_facets(n, [full & ~non_face for non_face in minimal_non_faces])


def clique_complex(G: Graph) -> SimplicialComplex:
    """Комплекс клик: фасеты - максимальные клики (Брон - Кербош с опорной вершиной)"""
    adj = G.adj
    cliques: list[int] = []

    def expand(clique: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            cliques.append(clique)
            return
        pivot_pool = candidates | excluded
        pivot = max(iter_bits(pivot_pool), key=lambda u: (adj[u] & candidates).bit_count())
        for v in iter_bits(candidates & ~adj[pivot]):
            bit = 1 << v
            expand(clique | bit, candidates & adj[v], excluded & adj[v])
            candidates &= ~bit
            excluded |= bit

    expand(0, G.vertices, 0)
    return SimplicialComplex.from_facets(G.n, cliques)


def union(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    ground = max(first.ground, second.ground)
    return SimplicialComplex.from_facets(ground, list(first.facets) + list(second.facets))


def intersection(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    ground = max(first.ground, second.ground)
    return SimplicialComplex.from_facets(ground, {a & b for a in first.facets for b in second.facets})


def contains(big: SimplicialComplex, small: SimplicialComplex) -> bool:
    """small - подкомплекс big (void содержится в любом комплексе)"""
    return all(big.contains_face(face) for face in small.facets)


def relabel(delta: SimplicialComplex, mapping: Sequence[int], ground: int) -> SimplicialComplex:
    """Перенумерация вершин: v -> mapping[v], новый носитель ground"""
    if len(set(mapping)) != len(mapping):
        raise InvalidInputError("Перенумерация должна быть инъективной")
    if any(not 0 <= target < ground for target in mapping):
        raise InvalidInputError(f"Перенумерация выходит за носитель 0..{ground - 1}")
    if delta.vertices() >> len(mapping):
        raise InvalidInputError("Перенумерация не покрывает все вершины комплекса")
    facets = [mask_of(mapping[v] for v in iter_bits(face)) for face in delta.facets]
    return SimplicialComplex.from_facets(ground, facets)
