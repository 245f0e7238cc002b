"""Точное рациональное ядро: оболочки, смена представлений, объёмы, смешанные объёмы"""

from .ddmethod import *  # noqa F403
from .hull import *  # noqa F403
from .linalg import *  # noqa F403
from .mixed import *  # noqa F403
from .polytope import *  # noqa F403
from .rational import *  # noqa F403
from .serialize import *  # noqa F403
