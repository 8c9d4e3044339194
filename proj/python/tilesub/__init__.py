from ._tilesub import *  # noqa: F401,F403
from ._tilesub import __doc__  # noqa: F401
