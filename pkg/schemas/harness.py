from pydantic import BaseModel, Field
from typing import Any, Optional

import json


class SuiteCase(BaseModel):
    """Один случай набора: параметры, ожидание по формуле и вычисленное значение"""
    params: dict[str, int]
    expected: Any = None
    actual: Any = None
    passed: bool = False
    skipped: bool = False
    note: Optional[str] = None


class SuiteResult(BaseModel):
    suite_id: str
    cases: list[SuiteCase] = Field(default_factory=list)
    runtime_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases if not case.skipped)

    @property
    def failed_count(self) -> int:
        return sum(1 for case in self.cases if not case.skipped and not case.passed)

    @property
    def skipped_count(self) -> int:
        return sum(1 for case in self.cases if case.skipped)

    @property
    def verified_count(self) -> int:
        return sum(1 for case in self.cases if not case.skipped)

    def canonical_json(self) -> str:
        """Сериализация без времени выполнения: два прогона дают одинаковые строки"""
        payload = self.model_dump(mode="json", exclude={"runtime_ms"})
        return json.dumps(payload, sort_keys=True, ensure_ascii=False)


class Prediction(BaseModel):
    branch: str
    dimension: Optional[int] = None
    count: Optional[int] = None
    void: bool = False


class ConjectureRow(BaseModel):
    conjecture: str
    params: dict[str, int]
    observed: Optional[dict[int, int]] = None
    observed_void: bool = False
    predictions: list[Prediction] = Field(default_factory=list)
    match: bool = False
    skipped: bool = False
    note: Optional[str] = None
