import enum


class ComplexKind(str, enum.Enum):
    """Вид симплициального комплекса"""
    VOID = "void"  # Нет ни одной грани, даже пустой
    EMPTY_FACE = "empty_face"  # Единственная грань - пустое множество
    ORDINARY = "ordinary"


class CutVariant(str, enum.Enum):
    """Какой комплекс разрезов строить"""
    TOTAL = "total"  # Фасеты - дополнения независимых k-множеств
    CUT = "cut"  # Фасеты - дополнения несвязных k-множеств
