"""Вспомогательные функции и метаклассы пакета"""

from functools import wraps
from typing import Callable, TypeVar

T = TypeVar("T")

__all__ = ("singleton", "NoInstanceMeta")


def singleton(reader: Callable[..., T]) -> Callable[..., T | bool]:
    """Значение настройки читается один раз и дальше отдаётся из памяти

    Первый вызов с аргументами (обычно `os.environ` в `main`) вычисляет
    значение. Вызов без аргументов до этого возвращает False, так модули
    могут спрашивать `DEBUG()` или `THREADS()` раньше, чем CLI прочитал окружение.

        @singleton
        def THREADS(environ=None) -> int:
            return int(environ.get("ABX_THREADS", "1"))

        THREADS()              # False
        THREADS(os.environ)    # 4
        THREADS({})            # всё ещё 4
    """
    unset = object()
    value = unset

    @wraps(reader)
    def read(*args, **kwargs):
        nonlocal value
        if value is unset:
            if not (args or kwargs):
                return False
            value = reader(*args, **kwargs)
        return value

    return read


class NoInstanceMeta(type):
    """Класс-пространство имён: только атрибуты, экземпляров нет

    Так устроены теги утверждений `abx.records.theorem`.
    """

    def __call__(cls, *args, **kwargs):
        raise TypeError(f"{cls.__name__} служит пространством имён, экземпляры не создаются")
