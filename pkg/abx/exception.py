"""Иерархия ошибок abx и их представление для CLI и HTTP"""

import traceback
import uuid
from typing import Any


class AbxError(Exception):
    """Базовый класс для ошибок abx."""

    # Код завершения процесса CLI
    exit_code = 1
    # Код ответа сервиса
    http_status = 400
    message = "Ошибка обработки запроса."

    def __init__(self, message: str | None = None) -> None:
        self.message = message or self.message
        super().__init__(self.message)


class GeometryError(AbxError):
    """Нарушено предусловие операции над многогранниками."""

    message = "Нарушено предусловие геометрической операции."


class DimensionMismatchError(GeometryError):
    message = "Размерности аргументов не совпадают."


class OriginNotInteriorError(GeometryError):
    message = "Начало координат не лежит строго внутри тела."


class NotAntiBlockingError(AbxError):
    message = "Тело не является anti-blocking."


class NotLocallyAntiBlockingError(AbxError):
    message = "Тело не является локально anti-blocking."


class ConeError(AbxError):
    """Ошибка конуса или тела над конусом."""

    message = "Конус должен быть заострённым и полномерным."


class PosetError(AbxError):
    message = "Некорректное частично упорядоченное множество."


class ConfigurationError(AbxError):
    message = "Некорректная конфигурация запуска."


class CounterexampleError(AbxError):
    """Проверяемое неравенство нарушено хотя бы на одном экземпляре."""

    # Теорема нарушена: это ошибка в реализации, а не в конфигурации
    exit_code = 2
    http_status = 409

    def __init__(self, records: list | None = None, message: str | None = None):
        self.records = records or []
        super().__init__(
            message or f"Найдено контрпримеров: {len(self.records)}."
        )


def error_payload(exc: Exception, debug: bool = False) -> dict[str, Any]:
    """Представить ошибку в виде словаря для JSON

    Пример:

        try:
            ...
        except AbxError as exc:
            print(json.dumps(error_payload(exc)))
    """
    content: dict[str, Any] = {}
    content["detail"] = getattr(exc, "message", str(exc))
    content["error_type"] = type(exc).__name__
    content["error_id"] = str(uuid.uuid4())
    content["exit_code"] = getattr(exc, "exit_code", 1)
    # Добавляем трассировку стека в debug режиме
    if debug:
        content["traceback"] = "".join(
            traceback.format_exception(type(exc), exc, exc.__traceback__)
        )
    return content
