"""Конусы, C-anti-blocking тела, проекции и разбиения по граням"""

from .body import *  # noqa F403
from .cone import *  # noqa F403
from .dissect import *  # noqa F403
from .generators import *  # noqa F403
from .nearest import *  # noqa F403
