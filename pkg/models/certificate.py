import enum


class CertificateKind(str, enum.Enum):
    """Вывод о гомотопическом типе по критическим клеткам Морса"""
    WEDGE_OF_SPHERES = "wedge_of_spheres"
    CONTRACTIBLE = "contractible"
    INCONCLUSIVE = "inconclusive"


class ContractibilityKind(str, enum.Enum):
    """Причина, по которой комплекс стягиваем"""
    SINGLE_FACET = "single_facet"  # Симплекс
    CONE = "cone"  # Есть вершина во всех фасетах
    MORSE_POINT = "morse_point"  # Лексикографическое паросочетание без критических клеток
