from pydantic import BaseModel, Field
from typing import Optional


class BettiReport(BaseModel):
    """Приведенные числа Бетти комплекса над ℚ"""
    dims: list[int] = Field(default_factory=list, description="Размерности от -1 до d")
    f: list[int] = Field(default_factory=list, description="Число граней по размерностям -1..d")
    betti: dict[int, int] = Field(default_factory=dict, description="Приведенные числа Бетти")
    euler_reduced: int = 0
    torsion_checked: bool = False
    torsion_found: bool = False
    torsion_primes: list[int] = Field(default_factory=list)
    void: bool = False
    dimension: Optional[int] = None

    def nonzero(self) -> dict[int, int]:
        return {d: b for d, b in self.betti.items() if b}

    def betti_at(self, d: int) -> int:
        return self.betti.get(d, 0)

    def is_acyclic(self) -> bool:
        """Все приведенные числа Бетти равны нулю"""
        return not self.nonzero()

    def single_sphere(self) -> Optional[tuple[int, int]]:
        """(d, β_d), если ненулевое число Бетти ровно одно"""
        nonzero = self.nonzero()
        if len(nonzero) != 1:
            return None
        return next(iter(nonzero.items()))

    def to_payload(self, n: int, k: int) -> dict:
        """JSON-представление для командной строки"""
        return {
            "n": n,
            "k": k,
            "dim": self.dimension,
            "f": self.f,
            "betti": {str(d): b for d, b in self.betti.items()},
            "euler": self.euler_reduced,
            "torsion": self.torsion_found,
            "void": self.void,
        }
