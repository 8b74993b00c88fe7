"""
Разбор диапазонов параметров вида "n=2..6,k=2..5" или "m=3,n=3..4".
"""

from typing import Optional

import re

from core.errors import InvalidInputError

_ITEM = re.compile(r"^\s*([a-zA-Z_]\w*)\s*=\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")

Ranges = dict[str, list[int]]


def parse_ranges(text: Optional[str]) -> Ranges:
    """Пустая строка дает пустой словарь (значения по умолчанию у набора)"""
    if not text or not text.strip():
        return {}
    ranges: Ranges = {}
    for item in re.split(r"[;,]\s*(?=[a-zA-Z_])", text.strip()):
        match = _ITEM.match(item)
        if not match:
            raise InvalidInputError(f"Некорректный диапазон: {item!r} (ожидается name=a..b)")
        name, low, high = match.group(1), int(match.group(2)), match.group(3)
        high = int(high) if high is not None else low
        if high < low:
            raise InvalidInputError(f"Пустой диапазон {name}={low}..{high}")
        ranges[name] = list(range(low, high + 1))
    return ranges


def merge_ranges(defaults: Ranges, overrides: Optional[Ranges]) -> Ranges:
    merged = dict(defaults)
    merged.update(overrides or {})
    return merged


def format_ranges(ranges: Ranges) -> str:
    parts = []
    for name, values in ranges.items():
        if values and values == list(range(values[0], values[-1] + 1)):
            parts.append(f"{name}={values[0]}..{values[-1]}" if len(values) > 1 else f"{name}={values[0]}")
    return ",".join(parts)
