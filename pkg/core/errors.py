"""
Исключения предметной области.

InvalidInputError - нарушены предусловия операции (отказ),
ResourceCapExceeded - вычисление упирается в настроенный лимит.
"""

from typing import Optional


class InvalidInputError(ValueError):
    """Некорректные входные данные: граф, комплекс, расписание или параметры"""


class ResourceCapExceeded(RuntimeError):
    """Превышен лимит ресурсов (число граней, фасет или вершин)"""

    def __init__(self, what: str, count: int, cap: int, detail: Optional[str] = None):
        self.what = what
        self.count = count
        self.cap = cap
        message = f"Превышен лимит: {what} = {count} > {cap}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
