"""Во время работы программы, эти значения заполняются один раз из окружения процесса"""

import os
from typing import Mapping

from abx.exception import ConfigurationError
from abx.utils import singleton


@singleton
def DEBUG(environ: Mapping[str, str] | None = None) -> bool:
    return environ.get("ABX_DEBUG", "0").strip().lower() in ("1", "true", "yes")


@singleton
def THREADS(environ: Mapping[str, str] | None = None) -> int:
    """Сколько процессов можно занять проверкой корпуса (ABX_THREADS)"""
    raw = environ.get("ABX_THREADS", "1").strip()
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"ABX_THREADS должно быть целым числом: {raw!r}.")
    return max(1, min(value, os.cpu_count() or 1))
