from .complex import ComplexKind, CutVariant
from .certificate import CertificateKind, ContractibilityKind
from .harness import (
    SuiteId,
    GraphFamily,
    ConjectureId,
    TableFamily,
    TableFormat,
    CheckProperty,
    ScheduleFamily,
    to_enum,
)

__all__ = [
    "ComplexKind",
    "CutVariant",
    "CertificateKind",
    "ContractibilityKind",
    "SuiteId",
    "GraphFamily",
    "ConjectureId",
    "TableFamily",
    "TableFormat",
    "CheckProperty",
    "ScheduleFamily",
    "to_enum",
]
