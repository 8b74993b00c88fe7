from fastapi import FastAPI
from api.routes import router
from core.config import settings
import logging

logger = logging.getLogger(__name__)

logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


app = FastAPI(
    title=settings.APP_NAME,
    description="Тотальные k-разрезные комплексы графов: построение, гомологии, паросочетания Морса и проверка утверждений",
    version="1.0.0"
)

app.include_router(router, prefix="/api/v1", tags=["complexes"])

logger.info("Лимит граней: %d, процессов для наборов: %d", settings.CUTCOMPLEX_FACE_CAP, settings.CUTCOMPLEX_WORKERS)


@app.get("/")
async def root():
    """Корневой эндпоинт"""
    return {
        "message": settings.APP_NAME,
        "version": "1.0.0",
        "docs": "/docs"
    }


@app.get("/health")
async def health_check():
    """Проверка здоровья приложения"""
    return {"status": "healthy"}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(
        "main:app",
        host="0.0.0.0",
        port=8000,
        reload=settings.DEBUG,
        log_level=settings.LOG_LEVEL.lower()
    )
