"""
Множества вершин как битовые маски.

Бит i установлен тогда и только тогда, когда вершина i входит в множество.
Порядок "лексикографический по маскам" означает обычный порядок чисел.
"""

from typing import Iterable, Iterator


def full_mask(n: int) -> int:
    """Маска всех вершин 0..n-1"""
    return (1 << n) - 1


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Вершины маски по возрастанию"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_subset(small: int, big: int) -> bool:
    return small & ~big == 0


def format_mask(mask: int) -> str:
    """Человекочитаемая запись: {0,2,5}"""
    return "{" + ",".join(str(v) for v in iter_bits(mask)) + "}"
