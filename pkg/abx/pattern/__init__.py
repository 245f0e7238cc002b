"""Шаблон HTTP сервиса abx"""

from .pattern_fastapi import *  # noqa F403
from .service import *  # noqa F403
