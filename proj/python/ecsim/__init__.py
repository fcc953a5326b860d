"""Entangled coherent state dynamics of excitons coupled to a cavity mode."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
