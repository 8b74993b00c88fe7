from pydantic_settings import BaseSettings
from pydantic import Field


class Settings(BaseSettings):
    # Лимиты вычислений (все проверяются до тяжелой работы)
    CUTCOMPLEX_FACE_CAP: int = Field(2 ** 22, ge=1, description="Максимум граней для betti() и Морса")
    CUTCOMPLEX_SNF_FACE_CAP: int = Field(2 ** 16, ge=1, description="Максимум граней для SNF-оракула")
    CUTCOMPLEX_VD_FACE_CAP: int = Field(2 ** 16, ge=1, description="Максимум граней для проверки VD")
    CUTCOMPLEX_FACET_CAP: int = Field(12, ge=1, description="Максимум фасет для поиска шеллинга")
    CUTCOMPLEX_TABLE_FACE_CAP: int = Field(2 ** 17, ge=1, description="Максимум граней для ячейки таблицы")
    CUTCOMPLEX_DUAL_FACE_CAP: int = Field(2 ** 20, ge=1, description="Максимум граней для двойственности Александера")

    # Графы
    CUTCOMPLEX_WORD_WIDTH: int = Field(64, ge=1, description="Максимальное число вершин графа")
    CUTCOMPLEX_REALIZABILITY_MAX_N: int = Field(7, ge=1, description="Максимум вершин для перебора графов")

    # Прогон наборов проверок
    CUTCOMPLEX_WORKERS: int = Field(1, description="Число процессов joblib (-1 = все ядра)")
    CUTCOMPLEX_CORPUS_SIZE: int = 200
    CUTCOMPLEX_CORPUS_MAX_N: int = 8
    CUTCOMPLEX_CORPUS_SEED: int = 20231

    # Application settings
    APP_NAME: str = "Total Cut Complexes"
    LOG_LEVEL: str = "INFO"
    DEBUG: bool = False

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True
        extra = "ignore"


settings = Settings()
