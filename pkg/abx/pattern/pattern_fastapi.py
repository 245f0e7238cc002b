"""
Модуль для шаблона сервиса abx на FastAPI
"""

import re
from pathlib import Path

from fastapi import APIRouter, FastAPI
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from abx.exception import AbxError
from abx.middleware import abx_exception_handler, log_request_response

__all__ = ("base_pattern", "read_version", "HealthcheckResponse")

root_path_abx = Path(__file__).parent.parent.parent


def read_version(base_dir: Path) -> str:
    """Версия из файла version.toml"""
    try:
        text = (base_dir / "version.toml").read_text(encoding="utf-8")
    except OSError:
        return "0.0.0"
    found = re.search(r'version=\"([^\"]+)"', text)
    return found.group(1) if found else "0.0.0"


def base_pattern(
    app: FastAPI,
    routers: tuple[APIRouter, ...],
    debug: bool,
    base_dir: Path = root_path_abx,
    origins: list | None = None,
):
    """Паттерн построения сервиса по умолчанию"""
    # Включает режим отладки: трассировки в ответах и лог времени запросов
    app.debug = debug
    if app.debug:
        app.middleware("http")(log_request_response)
    # Подключить обработчик ошибок
    app.exception_handler(AbxError)(abx_exception_handler)
    version = read_version(base_dir)
    app.version = version
    readme = base_dir / "README.md"
    if readme.exists():
        app.description = readme.read_text(encoding="utf-8").strip()

    app.openapi_tags = app.openapi_tags or []
    for router in routers:
        app.include_router(router)
    app.openapi_tags.append({"name": "common", "description": "Методы из common"})
    # Добавить CORS
    app.add_middleware(
        CORSMiddleware,
        allow_origins=origins or ["*"],
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/healthcheck", summary="Проверить состояние приложения", tags=["common"])
    async def healthcheck() -> HealthcheckResponse:
        return {"status": True, "version": version}


class HealthcheckResponse(BaseModel):
    status: bool
    version: str
