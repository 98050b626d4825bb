"""Exact workbench for weak Hopf algebras and their quantum doubles."""

from ._weakhopf import *  # noqa: F401,F403
from ._weakhopf import __version__  # noqa: F401
