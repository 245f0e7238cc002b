"""C-тела, их поляры, теневые системы и симметризации Штейнера"""

from .cayley import *  # noqa F403
from .enclosure import *  # noqa F403
from .mahler import *  # noqa F403
from .steiner import *  # noqa F403
