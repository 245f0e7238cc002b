"""Пакетный запуск: корпуса экземпляров, проверочные наборы и CLI `abx`"""

from .config import *  # noqa F403
from .corpus import *  # noqa F403
from .runner import *  # noqa F403
from .suites import *  # noqa F403
