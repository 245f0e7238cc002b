"""Middleware и обработчик ошибок сервиса"""

import logging
import time

from fastapi import Request
from fastapi.responses import JSONResponse

from abx.appstate import DEBUG
from abx.exception import AbxError, error_payload

logger = logging.getLogger("abx.service")


def request_log_format(
    request: Request, status_code: int, process_time: float | None = None
) -> str:
    """Форматировать запрос в лог строку"""
    query = request.url.query
    client = request.client
    return '{host}:{port} - "{method} {path}{query}" - {status_code}{process_time}'.format(
        host=client.host if client else "-",
        port=client.port if client else "-",
        method=request.method,
        path=request.url.path,
        query=f"?{query}" if query else "",
        status_code=status_code,
        process_time=f" - [{process_time:.2f} ms]" if process_time else "",
    )


async def log_request_response(request: Request, call_next):
    """Логировать время выполнения API запроса

    Подключение:

    app.middleware('http')(log_request_response)
    """
    start_time = time.perf_counter()
    response = await call_next(request)
    process_time = (time.perf_counter() - start_time) * 1000

    if DEBUG() or request.app.debug:
        logger.info(request_log_format(request, response.status_code, process_time))
    response.headers["X-Process-Time"] = f"{process_time:.2f} ms"
    return response


async def abx_exception_handler(request: Request, exc: AbxError) -> JSONResponse:
    """Ответ с тем же содержимым, что печатает CLI

    Подключение:

        app.exception_handler(AbxError)(abx_exception_handler)
    """
    content = error_payload(exc, debug=bool(DEBUG() or request.app.debug))
    content["context"] = request_log_format(request, exc.http_status)
    content["request_path"] = request.url.path
    content["query_params"] = dict(request.query_params)
    if failures := getattr(exc, "records", None):
        content["failures"] = [r.model_dump(mode="json") for r in failures]
    logger.warning(content["context"] + " " + content["detail"])
    return JSONResponse(status_code=exc.http_status, content=content)
