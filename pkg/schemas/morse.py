from pydantic import BaseModel, Field
from typing import Optional

from models.certificate import CertificateKind


class MorseReport(BaseModel):
    """Перепись критических клеток и вывод о гомотопическом типе"""
    schedule: list[int] = Field(default_factory=list)
    matched_pairs: int = 0
    cells_per_dim: dict[int, int] = Field(default_factory=dict, description="c_i для i >= 0")
    empty_matched: bool = False
    critical_faces: list[list[int]] = Field(default_factory=list)
    certificate: CertificateKind = CertificateKind.INCONCLUSIVE
    sphere_dim: Optional[int] = None
    sphere_count: Optional[int] = None
    morse_inequalities_ok: Optional[bool] = None
    acyclic: Optional[bool] = Field(None, description="None - ацикличность не проверялась")

    @property
    def total_critical(self) -> int:
        return sum(self.cells_per_dim.values())

    def describe(self) -> str:
        if self.certificate is CertificateKind.WEDGE_OF_SPHERES:
            return f"букет {self.sphere_count} сфер S^{self.sphere_dim}"
        if self.certificate is CertificateKind.CONTRACTIBLE:
            return "стягиваем"
        return "вывод не сделан"
