"""ЧУМ, линейные продолжения, цепные многогранники и неравенства Сидоренко"""

from .checks import *  # noqa F403
from .extensions import *  # noqa F403
from .generators import *  # noqa F403
from .polytopes import *  # noqa F403
from .poset import *  # noqa F403
