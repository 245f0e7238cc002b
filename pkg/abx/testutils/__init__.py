"""Пакет тестовых фикстур и базовых классов для тестов abx"""

from .fixture_base import *  # noqa F403
from .utils import *  # noqa F403
