"""Multi-local-dimension node centrality and SI spreading analysis."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
