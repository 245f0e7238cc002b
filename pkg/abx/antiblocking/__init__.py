"""Anti-blocking и локально anti-blocking тела: двойственность, разрезания, неравенства"""

from .body import *  # noqa F403
from .decompose import *  # noqa F403
from .duality import *  # noqa F403
from .generators import *  # noqa F403
from .hanner import *  # noqa F403
from .inequalities import *  # noqa F403
